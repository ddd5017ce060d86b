import json

import pytest

from bosonfermion.boson import parse_boson, schur
from bosonfermion.correspondence import sigma
from bosonfermion.fermion import basis_state, vacuum
from bosonfermion.geometry import (
    DegreeUnderflow,
    LocalizedClass,
    NonDivisibleCoefficient,
    QuiverClass,
    bilinear_form,
    c2_toy_check,
    c2_toy_model,
    cup,
    eta,
    eta_inverse,
    eta_raw,
    euler_class,
    fundamental_class,
    geometric_boson,
    hecke_e,
    hecke_f,
    integrate,
    normalized_class,
    parse_quiver,
    phi,
    phi_inverse,
    point_variety_dimension,
    power_sum_class,
    pullback,
    pushforward,
    quiver_form,
    tau,
    weight_of,
)
from bosonfermion.partitions import (
    Partition,
    dimension_vector,
    hook_product,
    partitions_of,
    partitions_up_to,
    z_factor,
)
from bosonfermion.scalars import TLaurent, TScalar, parse_tscalar, rat


def P(*parts) -> Partition:
    return Partition(parts)


def ts(text: str) -> TScalar:
    return parse_tscalar(text)


# --- Euler classes -----------------------------------------------------------------

def test_euler_class_examples():
    assert euler_class(P()) == TScalar.one()
    assert euler_class(P(1)) == ts("-t^2")
    assert euler_class(P(2, 1)) == ts("-9*t^6")


def test_euler_class_closed_form():
    for shape in partitions_up_to(10):
        n = shape.size()
        expected = TScalar.monomial((-1) ** n * hook_product(shape) ** 2, 2 * n)
        assert euler_class(shape) == expected


# --- push/pull/cup/integrate ----------------------------------------------------------

def test_pushforward_pullback():
    for shape in partitions_up_to(6):
        pushed = pushforward(shape, TScalar.one())
        assert pullback(pushed, shape) == euler_class(shape)
    assert pushforward(P(1), TScalar.one(), 1).restrictions == {P(1): ts("-t^2")}
    with pytest.raises(ValueError):
        pushforward(P(1), TScalar.one(), 2)


def test_cup_disjoint_supports():
    a = fundamental_class(P(2))
    b = fundamental_class(P(1, 1))
    assert cup(a, b).is_zero()
    with pytest.raises(ValueError):
        cup(a, fundamental_class(P(1)))


def test_integrate_examples():
    for shape in partitions_up_to(6):
        assert integrate(fundamental_class(shape)) == TScalar.one()
    lam = P(2, 1)
    squared = cup(normalized_class(lam), normalized_class(lam))
    assert integrate(squared) == TScalar.monomial(-1)
    assert integrate(LocalizedClass.zero(3)) == TScalar.zero()


def test_normalized_class_examples():
    assert pullback(normalized_class(P()), P()) == TScalar.one()
    assert pullback(normalized_class(P(1)), P(1)) == ts("t")
    assert pullback(normalized_class(P(2, 1)), P(2, 1)) == ts("3*t^3")


def test_bilinear_form_examples():
    for n in range(6):
        for a in partitions_of(n):
            for b in partitions_of(n):
                value = bilinear_form(normalized_class(a), normalized_class(b))
                assert value == TScalar.monomial(1 if a == b else 0)
    lam = P(2, 1)
    fund = fundamental_class(lam)
    assert bilinear_form(fund, fund) == TScalar.monomial(-1) * euler_class(lam)
    assert bilinear_form(fund, LocalizedClass.zero(3)) == TScalar.zero()


# --- Hecke operators ----------------------------------------------------------------------

def test_hecke_examples():
    start = QuiverClass.unit(P())
    one_box = hecke_f(0, start)
    assert one_box == parse_quiver("t*1@[1]")
    assert hecke_e(0, one_box) == start
    assert hecke_f(1, one_box) == parse_quiver("t^2*1@[2]")
    assert hecke_f(-1, one_box) == parse_quiver("t^2*1@[1,1]")
    assert hecke_f(5, one_box).is_zero()


def test_hecke_e_divisibility():
    with pytest.raises(NonDivisibleCoefficient):
        hecke_e(0, QuiverClass.unit(P(1)))
    # no removable box of that residue: no divisibility demand is made
    assert hecke_e(3, QuiverClass.unit(P(1))).is_zero()


def test_hecke_highest_weight():
    for k in range(-5, 6):
        assert hecke_e(k, QuiverClass.unit(P())).is_zero()


def test_quiver_class_requires_polynomial_coefficients():
    with pytest.raises(ValueError):
        QuiverClass({P(1): TLaurent({-1: rat(1)})})


# --- weights and dimensions ------------------------------------------------------------------

def test_weight_examples():
    assert weight_of(P()) == {0: 1}
    assert weight_of(P(1)) == {-1: 1, 0: -1, 1: 1}
    # consistency with corner counts: +1 per addable, -1 per removable residue
    assert weight_of(P(2, 1)) == {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}


def test_point_variety_dimension():
    for shape in partitions_up_to(10):
        assert point_variety_dimension(dimension_vector(shape)) == 0
    # a non-partition dimension vector has negative dimension
    assert point_variety_dimension({0: 2}) == -4


# --- tau, eta, phi ------------------------------------------------------------------------------

def test_tau_examples():
    assert tau(vacuum(0)) == QuiverClass.unit(P())
    assert tau(basis_state(0, P(2, 1))) == parse_quiver("t^3*1@[2,1]")
    mixed = basis_state(0, P(1)) + basis_state(0, P(2))
    assert tau(mixed) == parse_quiver("t*1@[1] + t^2*1@[2]")
    with pytest.raises(ValueError):
        tau(vacuum(1))


def test_eta_examples():
    assert eta(parse_quiver("t*1@[1]")) == normalized_class(P(1))
    assert eta(QuiverClass.zero()).is_zero()
    with pytest.raises(ValueError):
        eta(parse_quiver("t*1@[1] + t^2*1@[2]"))


def test_eta_raw_is_t_to_n_times_eta():
    for shape in partitions_up_to(6):
        c = QuiverClass.graded_unit(shape)
        scaled = eta(c).scale(TScalar.monomial(1, shape.size()))
        assert eta_raw(c) == scaled


def test_eta_inverse_examples():
    assert eta_inverse(normalized_class(P(2, 1))) == parse_quiver("t^3*1@[2,1]")
    for shape in partitions_up_to(6):
        c = QuiverClass.graded_unit(shape)
        assert eta_inverse(eta(c)) == c
        assert eta(eta_inverse(normalized_class(shape))) == normalized_class(shape)
    # a genuinely localized element is rejected
    bad = LocalizedClass(1, {P(1): ts("1 / (t + 1)")})
    with pytest.raises(ValueError):
        eta_inverse(bad)


def test_eta_isometry_small():
    for n in range(5):
        for a in partitions_of(n):
            for b in partitions_of(n):
                ca, cb = QuiverClass.graded_unit(a), QuiverClass.graded_unit(b)
                lhs = bilinear_form(eta(ca), eta(cb))
                assert lhs == TScalar.monomial(quiver_form(ca, cb))


def test_phi_examples():
    assert phi(normalized_class(P(1))) == parse_boson("p1")
    both = normalized_class(P(2)) + normalized_class(P(1, 1))
    assert phi(both) == parse_boson("p1^2")
    assert phi_inverse(parse_boson("p2")) == normalized_class(P(2)) - normalized_class(P(1, 1))
    with pytest.raises(ValueError):
        phi_inverse(parse_boson("p1 + p2"))
    with pytest.raises(ValueError):
        phi(LocalizedClass(1, {P(1): ts("t^2")}))


def test_phi_round_trip():
    for shape in partitions_up_to(6):
        assert phi(phi_inverse(schur(shape))) == schur(shape)


# --- geometric bosons ------------------------------------------------------------------------------

def test_geometric_boson_examples():
    vac_class = normalized_class(P())
    assert geometric_boson(-1, vac_class) == normalized_class(P(1))
    assert geometric_boson(-1, normalized_class(P(1))) == normalized_class(P(2)) + normalized_class(P(1, 1))
    assert geometric_boson(1, normalized_class(P(1))) == vac_class
    assert geometric_boson(0, normalized_class(P(1))) == LocalizedClass.zero(1)
    with pytest.raises(DegreeUnderflow):
        geometric_boson(2, normalized_class(P(1)))


def test_power_sum_class_pairing():
    for n in range(5):
        for a in partitions_of(n):
            for b in partitions_of(n):
                value = bilinear_form(power_sum_class(a), power_sum_class(b))
                expected = TScalar.monomial(z_factor(a) if a == b else 0)
                assert value == expected


def test_geometric_bosons_commute_with_transport():
    # the transported operator matches multiplication/derivation across phi
    from bosonfermion.boson import oscillator

    for shape in partitions_up_to(5):
        beta = normalized_class(shape)
        for k in (-2, -1, 1):
            if k > shape.size():
                continue
            assert phi(geometric_boson(k, beta)) == oscillator(k, phi(beta))


# --- the plane model -----------------------------------------------------------------------------------

def test_c2_toy():
    assert c2_toy_check() is True
    assert c2_toy_check(curve_weight=1) is False
    model = c2_toy_model()
    assert model["tangent_euler"] == ts("-t^2")
    assert model["curve_restriction"] == ts("t")


# --- the commuting square --------------------------------------------------------------------------------

def test_commuting_square_small():
    for shape in partitions_up_to(6):
        state = basis_state(0, shape)
        assert phi(eta(tau(state))) == sigma(state)


# --- serialization ----------------------------------------------------------------------------------------

def test_quiver_text_round_trip():
    for text in ["t*1@[1]", "t^2*1@[2] + t^2*1@[1,1]", "1@[]", "0"]:
        assert str(parse_quiver(text)) == text
    c = QuiverClass({P(2): TLaurent({2: rat(1), 0: rat(-1)}), P(1, 1): TLaurent({0: rat(-3)})})
    assert parse_quiver(str(c)) == c


def test_quiver_json_round_trip():
    c = tau(basis_state(0, P(2, 1)) + basis_state(0, P(1)).scale(-2))
    assert QuiverClass.from_json(c.to_json()) == c


def test_localized_json_round_trip():
    beta = phi_inverse(parse_boson("p2 p1"))
    data = beta.to_json()
    assert set(data["restrictions"]) == {str(s) for s in partitions_of(3)}
    assert LocalizedClass.from_json(data) == beta
    assert LocalizedClass.from_json(json.loads(json.dumps(data))) == beta
