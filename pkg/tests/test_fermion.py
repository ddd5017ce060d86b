import pytest
from hypothesis import given, settings, strategies as st

from bosonfermion.fermion import (
    ChargedMonomial,
    FermionState,
    GlMatrix,
    alpha,
    basis_state,
    chevalley_e,
    chevalley_f,
    gl_action,
    hermitian_form,
    parse_fermion,
    psi,
    psi_star,
    vacuum,
)
from bosonfermion.partitions import (
    Partition,
    monomial_indices,
    partitions_of,
    partitions_up_to,
    shape_from_indices,
)
from bosonfermion.scalars import rat


def P(*parts) -> Partition:
    return Partition(parts)


def phi(shape, charge=0) -> FermionState:
    return basis_state(charge, Partition(shape))


# --- independent oracle: the derivation rule, slot by slot -----------------------------

def substitution_action(i: int, j: int, mono: ChargedMonomial) -> FermionState:
    """Matrix-unit action computed directly on the index word: replace the slot
    holding j by i and resort the wedge word, instead of composing the two
    one-particle operators."""
    m, shape = mono
    window = len(shape) + max(0, m - min(i, j)) + 3
    word = list(monomial_indices(shape, m, window))
    if j not in word:
        return FermionState.zero()
    s = word.index(j)
    if i == j:
        return basis_state(m, shape)
    others = word[:s] + word[s + 1:]
    if i in others:
        return FermionState.zero()
    target = sum(1 for value in others if value > i)
    sign = (-1) ** abs(s - target)
    resorted = sorted(others + [i], reverse=True)
    new_shape = shape_from_indices(resorted, m)
    return basis_state(m, new_shape).scale(sign)


@pytest.mark.parametrize("i", range(-4, 5))
def test_gl_action_matches_substitution_oracle(i):
    for j in range(-4, 5):
        for charge in (-1, 0, 1):
            for shape in partitions_up_to(6):
                mono = ChargedMonomial(charge, shape)
                direct = substitution_action(i, j, mono)
                composed = gl_action(GlMatrix.unit(i, j), basis_state(charge, shape))
                assert composed == direct, (i, j, mono)


# --- wedging and contracting -------------------------------------------------------------

def test_psi_examples():
    assert psi(1, vacuum(0)) == phi((), 1)
    assert psi(0, vacuum(0)).is_zero()
    assert psi(2, vacuum(0)) == phi((1,), 1)


def test_psi_star_examples():
    assert psi_star(0, vacuum(0)) == phi((), -1)
    assert psi_star(1, vacuum(0)).is_zero()
    assert psi_star(-1, vacuum(0)) == -phi((1,), -1)


def test_clifford_relations_small():
    states = [phi(shape, m) for m in (-1, 0, 1) for shape in partitions_up_to(4)]
    for state in states:
        for i in range(-3, 4):
            for j in range(-3, 4):
                mixed = psi(i, psi_star(j, state)) + psi_star(j, psi(i, state))
                assert mixed == (state if i == j else FermionState.zero())
                assert (psi(i, psi(j, state)) + psi(j, psi(i, state))).is_zero()
                assert (psi_star(i, psi_star(j, state)) + psi_star(j, psi_star(i, state))).is_zero()


def test_vacuum_annihilation():
    for m in (-2, 0, 3):
        for j in range(m - 3, m + 4):
            assert psi(j, vacuum(m)).is_zero() == (j <= m)
            assert psi_star(j, vacuum(m)).is_zero() == (j > m)


# --- infinite-wedge action -----------------------------------------------------------------

def test_gl_examples():
    assert gl_action(GlMatrix.unit(1, 0), vacuum(0)) == phi((1,))
    for m in (-1, 0, 2):
        for j in range(m - 2, m + 3):
            image = gl_action(GlMatrix.unit(j, j), vacuum(m))
            assert image == (vacuum(m) if j <= m else FermionState.zero())
        assert gl_action(GlMatrix.unit(m, m + 1), vacuum(m)).is_zero()


def test_gl_action_linear_in_matrix():
    a = GlMatrix({(1, 0): rat(2), (0, 1): rat(-1, 3)})
    state = phi((2, 1))
    expected = gl_action(GlMatrix.unit(1, 0), state).scale(rat(2)) + gl_action(
        GlMatrix.unit(0, 1), state
    ).scale(rat(-1, 3))
    assert gl_action(a, state) == expected


def test_gl_adjointness():
    shapes = partitions_up_to(4)
    a = GlMatrix({(2, 0): rat(1), (-1, 1): rat(3, 2)})
    at = a.transpose()
    for x in shapes:
        for y in shapes:
            sx, sy = phi(x), phi(y)
            assert hermitian_form(gl_action(a, sx), sy) == hermitian_form(sx, gl_action(at, sy))


def test_chevalley_examples():
    assert chevalley_f(0, vacuum(0)) == phi((1,))
    assert chevalley_f(1, phi((1,))) == phi((2,))
    assert chevalley_e(0, phi((1,))) == vacuum(0)


def test_chevalley_adds_box_of_matching_residue():
    for shape in partitions_up_to(5):
        for k in range(-5, 6):
            image = chevalley_f(k, phi(shape))
            if image.is_zero():
                continue
            ((mono, coeff),) = image.terms.items()
            assert coeff == 1
            assert mono.shape.size() == shape.size() + 1


# --- free bosons ------------------------------------------------------------------------------

def test_alpha_examples():
    assert alpha(-1, vacuum(0)) == phi((1,))
    assert alpha(-1, phi((1,))) == phi((2,)) + phi((1, 1))
    for m in (-2, 0, 1):
        for shape in partitions_up_to(3):
            state = phi(shape, m)
            assert alpha(0, state) == state.scale(m)


def test_alpha_zero_matches_occupancy_count():
    # charge equals occupied positive states minus unoccupied non-positive ones
    for shape in partitions_up_to(5):
        for m in (-2, 0, 3):
            mono = ChargedMonomial(m, shape)
            occupied_positive = sum(1 for j in range(1, 30) if mono.occupied(j))
            unoccupied_nonpositive = sum(1 for j in range(-29, 1) if not mono.occupied(j))
            assert occupied_positive - unoccupied_nonpositive == m
            assert alpha(0, basis_state(m, shape)) == basis_state(m, shape).scale(m)


def test_alpha_matches_wide_window_sum():
    # contributions of psi_j psi*_{j+n} outside the computed window must vanish
    for shape in partitions_up_to(5):
        for m in (-1, 0, 2):
            state = phi(shape, m)
            for n in (-3, -1, 1, 2):
                wide = FermionState.zero()
                for j in range(-25, 26):
                    wide = wide + psi(j, psi_star(j + n, state))
                assert alpha(n, state) == wide, (shape, m, n)


def test_alpha_commutators_small():
    for shape in partitions_up_to(5):
        state = phi(shape)
        for k in range(-3, 4):
            for l in range(-3, 4):
                lhs = alpha(k, alpha(l, state)) - alpha(l, alpha(k, state))
                expected = state.scale(k) if k == -l else FermionState.zero()
                assert lhs == expected


def test_alpha_adjointness_small():
    shapes = partitions_up_to(5)
    for k in range(1, 4):
        for x in shapes:
            for y in shapes:
                lhs = hermitian_form(alpha(-k, phi(x)), phi(y))
                rhs = hermitian_form(phi(x), alpha(k, phi(y)))
                assert lhs == rhs


# --- form, gradings, state algebra -----------------------------------------------------------

def test_hermitian_form_examples():
    assert hermitian_form(phi((2, 1)), phi((2, 1))) == 1
    assert hermitian_form(phi((2, 1)), phi((2,))) == 0
    assert hermitian_form(phi((1,), 0), phi((1,), 1)) == 0
    mixed = phi((1,)).scale(2) + phi((2,)).scale(3)
    assert hermitian_form(mixed, phi((2,))) == 3


def test_charge_and_energy():
    state = phi((2, 1))
    assert state.charge() == 0 and state.energy() == 3
    assert vacuum(5).charge() == 5 and vacuum(5).energy() == 0
    mixed_energy = phi((1,)) + phi((2,))
    assert mixed_energy.charge() == 0
    with pytest.raises(ValueError):
        mixed_energy.energy()
    with pytest.raises(ValueError):
        (phi((1,), 0) + phi((1,), 1)).charge()
    with pytest.raises(ValueError):
        FermionState.zero().charge()


def test_charge_shifts():
    for shape in partitions_up_to(4):
        for j in range(-3, 4):
            up = psi(j, phi(shape, 1))
            if not up.is_zero():
                assert up.charge() == 2
            down = psi_star(j, phi(shape, 1))
            if not down.is_zero():
                assert down.charge() == 0


# --- text and JSON forms -----------------------------------------------------------------------

def test_format_examples():
    assert str(alpha(-1, alpha(-1, vacuum(0)))) == "phi[2] + phi[1,1]"
    assert str(FermionState.zero()) == "0"
    assert str(phi((2, 1), -1)) == "phi[2,1]@-1"
    assert str(phi((1,)).scale(rat(-1, 2))) == "-1/2*phi[1]"


def test_parse_examples():
    assert parse_fermion("vac(0)") == vacuum(0)
    assert parse_fermion("vac(-2)") == vacuum(-2)
    assert parse_fermion("phi[2,1]@1") == phi((2, 1), 1)
    assert parse_fermion("phi[2] + 2*phi[1,1]") == phi((2,)) + phi((1, 1)).scale(2)
    assert parse_fermion("0").is_zero()
    with pytest.raises(ValueError):
        parse_fermion("3")
    with pytest.raises(ValueError):
        parse_fermion("phi[2,1]@")


@st.composite
def fermion_states(draw):
    state = FermionState.zero()
    for _ in range(draw(st.integers(0, 4))):
        charge = draw(st.integers(-2, 2))
        size = draw(st.integers(0, 5))
        shape = draw(st.sampled_from(partitions_of(size)))
        num = draw(st.integers(-9, 9))
        den = draw(st.integers(1, 7))
        state = state + basis_state(charge, shape).scale(rat(num, den))
    return state


@settings(deadline=None)
@given(fermion_states())
def test_state_round_trips(state):
    assert parse_fermion(str(state)) == state
    assert str(parse_fermion(str(state))) == str(state)
    assert FermionState.from_json(state.to_json()) == state


@settings(deadline=None)
@given(fermion_states(), fermion_states(), st.integers(-4, 4))
def test_psi_adjointness_random(left, right, j):
    assert hermitian_form(psi(j, left), right) == hermitian_form(left, psi_star(j, right))
