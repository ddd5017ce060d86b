"""The fermionic Fock space: semi-infinite wedge monomials and their operators.

A basis monomial is the strictly decreasing index word i_k = (m - k) + shape_k,
encoded as the pair (charge m, partition shape).  Wedging in an index j above
position s carries sign (-1)^s where s counts the indices above j; contracting
the index at position s carries (-1)^s.  Insertion in front (j above every
index) has sign +1, the unique extension keeping the Clifford relations exact.
"""

from functools import cache
from typing import Iterable, NamedTuple

from .partitions import Partition, parse_partition
from .scalars import ONE, Rational, ZERO, parse_rational


class ChargedMonomial(NamedTuple):
    charge: int
    shape: Partition

    def energy(self) -> int:
        return self.shape.size()

    def index(self, k: int) -> int:
        return self.charge - k + self.shape.part(k)

    def occupied(self, j: int) -> bool:
        if j <= self.charge - len(self.shape):
            return True
        return any(self.index(k) == j for k in range(len(self.shape)))


def _wedge_in(j: int, mono: ChargedMonomial):
    """Insert index j; None when occupied, else (sign, monomial)."""
    if mono.occupied(j):
        return None
    m, shape = mono
    s = 0
    while mono.index(s) > j:
        s += 1
    parts = [shape.part(k) - 1 for k in range(s)]
    parts.append(j - (m + 1) + s)
    parts.extend(shape[s:])
    while parts and parts[-1] == 0:
        parts.pop()
    return (-1) ** s, ChargedMonomial(m + 1, Partition(parts))


def _contract_out(j: int, mono: ChargedMonomial):
    """Delete index j; None when absent, else (sign, monomial)."""
    m, shape = mono
    if j <= m - len(shape):
        s = m - j
    else:
        for k in range(len(shape)):
            if mono.index(k) == j:
                s = k
                break
        else:
            return None
    parts = [shape.part(k) + 1 for k in range(s)]
    parts.extend(shape[s + 1:])
    while parts and parts[-1] == 0:
        parts.pop()
    return (-1) ** s, ChargedMonomial(m - 1, Partition(parts))


class FermionState:
    """Finite Q-linear combination of charged monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[ChargedMonomial, Rational] | None = None):
        self.terms: dict[ChargedMonomial, Rational] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Rational(coeff)
                if coeff != 0:
                    self.terms[mono] = coeff

    @classmethod
    def zero(cls) -> "FermionState":
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: ChargedMonomial) -> Rational:
        return self.terms.get(mono, ZERO)

    def __add__(self, other: "FermionState") -> "FermionState":
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = merged.get(mono, ZERO) + coeff
            if s == 0:
                merged.pop(mono, None)
            else:
                merged[mono] = s
        out = FermionState()
        out.terms = merged
        return out

    def __neg__(self) -> "FermionState":
        return FermionState({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "FermionState") -> "FermionState":
        return self + (-other)

    def scale(self, factor) -> "FermionState":
        factor = Rational(factor)
        if factor == 0:
            return FermionState()
        return FermionState({m: c * factor for m, c in self.terms.items()})

    def __rmul__(self, factor) -> "FermionState":
        return self.scale(factor)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FermionState):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def charge(self) -> int:
        """Common charge of all monomials; error when mixed or zero."""
        charges = {mono.charge for mono in self.terms}
        if not charges:
            raise ValueError("the zero state has no charge")
        if len(charges) > 1:
            raise ValueError("state is not homogeneous in charge")
        return charges.pop()

    def energy(self) -> int:
        energies = {mono.energy() for mono in self.terms}
        if not energies:
            raise ValueError("the zero state has no energy")
        if len(energies) > 1:
            raise ValueError("state is not homogeneous in energy")
        return energies.pop()

    def __str__(self) -> str:
        return format_fermion(self)

    def __repr__(self) -> str:
        return f"FermionState<{self}>"

    def to_json(self) -> list[dict]:
        out = []
        for mono in sorted(self.terms, key=_term_sort_key):
            out.append({
                "charge": mono.charge,
                "partition": list(mono.shape),
                "coeff": str(self.terms[mono]),
            })
        return out

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "FermionState":
        terms: dict[ChargedMonomial, Rational] = {}
        for item in data:
            mono = ChargedMonomial(int(item.get("charge", 0)), Partition(item["partition"]))
            terms[mono] = terms.get(mono, ZERO) + parse_rational(item["coeff"])
        return cls(terms)


def basis_state(charge: int, shape: Partition) -> FermionState:
    return FermionState({ChargedMonomial(charge, Partition(shape)): ONE})


def vacuum(charge: int = 0) -> FermionState:
    return basis_state(charge, Partition())


def _apply_monomial_op(op, state: FermionState) -> FermionState:
    terms: dict[ChargedMonomial, Rational] = {}
    for mono, coeff in state.terms.items():
        hit = op(mono)
        if hit is None:
            continue
        sign, target = hit
        s = terms.get(target, ZERO) + (coeff if sign > 0 else -coeff)
        if s == 0:
            terms.pop(target, None)
        else:
            terms[target] = s
    return FermionState(terms)


def psi(j: int, state: FermionState) -> FermionState:
    """Wedging operator: creates a particle in state j, raising charge by one."""
    return _apply_monomial_op(lambda mono: _wedge_in(j, mono), state)


def psi_star(j: int, state: FermionState) -> FermionState:
    """Contracting operator: annihilates the particle in state j, lowering charge."""
    return _apply_monomial_op(lambda mono: _contract_out(j, mono), state)


class GlMatrix:
    """Infinite matrix with finitely many nonzero rational entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: dict[tuple[int, int], Rational]):
        self.entries = {
            (int(i), int(j)): Rational(c) for (i, j), c in entries.items() if c != 0
        }

    @classmethod
    def unit(cls, i: int, j: int) -> "GlMatrix":
        return cls({(i, j): ONE})

    def transpose(self) -> "GlMatrix":
        return GlMatrix({(j, i): c for (i, j), c in self.entries.items()})

    def __repr__(self) -> str:
        return f"GlMatrix({self.entries!r})"


@cache
def _unit_action(i: int, j: int, mono: ChargedMonomial):
    """psi_i psi*_j on a monomial: None or (sign, monomial)."""
    removed = _contract_out(j, mono)
    if removed is None:
        return None
    sign1, mid = removed
    added = _wedge_in(i, mid)
    if added is None:
        return None
    sign2, target = added
    return sign1 * sign2, target


def gl_action(a: GlMatrix, state: FermionState) -> FermionState:
    """Infinite-wedge action: sum of a_ij psi_i psi*_j, charge preserving."""
    terms: dict[ChargedMonomial, Rational] = {}
    for (i, j), entry in a.entries.items():
        for mono, coeff in state.terms.items():
            hit = _unit_action(i, j, mono)
            if hit is None:
                continue
            sign, target = hit
            s = terms.get(target, ZERO) + entry * coeff * sign
            if s == 0:
                terms.pop(target, None)
            else:
                terms[target] = s
    return FermionState(terms)


def chevalley_e(k: int, state: FermionState) -> FermionState:
    """e_k acts by psi_k psi*_{k+1}; on charge 0 it removes a box of residue k."""
    return gl_action(GlMatrix.unit(k, k + 1), state)


def chevalley_f(k: int, state: FermionState) -> FermionState:
    """f_k acts by psi_{k+1} psi*_k; on charge 0 it adds a box of residue k."""
    return gl_action(GlMatrix.unit(k + 1, k), state)


@cache
def _alpha_moves(n: int, mono: ChargedMonomial) -> tuple[tuple[int, ChargedMonomial], ...]:
    """Nonzero contributions of sum_j psi_j psi*_{j+n} on a monomial."""
    m, shape = mono
    top = m + shape.part(0)
    moves = []
    for j in range(m - len(shape) + 1, top - n + 1):
        if mono.occupied(j) or not mono.occupied(j + n):
            continue
        sign1, mid = _contract_out(j + n, mono)
        sign2, target = _wedge_in(j, mid)
        moves.append((sign1 * sign2, target))
    return tuple(moves)


def alpha(n: int, state: FermionState) -> FermionState:
    """Free boson alpha_n; alpha_0 multiplies each monomial by its charge."""
    if n == 0:
        return FermionState({mono: coeff * mono.charge for mono, coeff in state.terms.items()})
    terms: dict[ChargedMonomial, Rational] = {}
    for mono, coeff in state.terms.items():
        for sign, target in _alpha_moves(n, mono):
            s = terms.get(target, ZERO) + (coeff if sign > 0 else -coeff)
            if s == 0:
                terms.pop(target, None)
            else:
                terms[target] = s
    return FermionState(terms)


def hermitian_form(s1: FermionState, s2: FermionState) -> Rational:
    """Bilinear form for which the monomial basis is orthonormal."""
    small, large = (s1.terms, s2.terms) if len(s1.terms) <= len(s2.terms) else (s2.terms, s1.terms)
    total = ZERO
    for mono, coeff in small.items():
        other = large.get(mono)
        if other is not None:
            total += coeff * other
    return total


# --- text form ---------------------------------------------------------------

def _term_sort_key(mono: ChargedMonomial):
    return (mono.charge, mono.energy(), tuple(-p for p in mono.shape))


def format_fermion(state: FermionState) -> str:
    """Terms ordered by charge, energy, then reverse-lexicographic partition."""
    if state.is_zero():
        return "0"
    pieces = []
    for mono in sorted(state.terms, key=_term_sort_key):
        coeff = state.terms[mono]
        negative = coeff < 0
        mag = -coeff if negative else coeff
        basis = f"phi{mono.shape}"
        if mono.charge != 0:
            basis += f"@{mono.charge}"
        body = basis if mag == 1 else f"{mag}*{basis}"
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


def _tokenize_fermion(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif text.startswith("phi", i):
            j = text.find("]", i)
            if j < 0:
                raise ValueError(f"unterminated partition in {text!r}")
            tokens.append(("phi", parse_partition(text[i + 3:j + 1])))
            i = j + 1
        elif text.startswith("vac", i):
            tokens.append(("vac", None))
            i += 3
        elif ch in "+-*/@()":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in state {text!r}")
    return tokens


def parse_fermion(text: str) -> FermionState:
    """Parse printed states and literals like "vac(0)", "phi[2,1]@1", sums thereof."""
    text = text.strip()
    if text == "0":
        return FermionState.zero()
    tokens = _tokenize_fermion(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"truncated state literal {text!r}")
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_int() -> int:
        sign = 1
        while peek() in ("+", "-"):
            if take()[0] == "-":
                sign = -sign
        kind, value = take()
        if kind != "int":
            raise ValueError("expected an integer")
        return sign * value

    def parse_term() -> FermionState:
        coeff = ONE
        if peek() == "int":
            value = take()[1]
            if peek() == "/":
                take()
                kind, den = take()
                if kind != "int":
                    raise ValueError("expected a denominator")
                coeff = Rational(value, den)
            else:
                coeff = Rational(value)
            if peek() == "*":
                take()
        kind = peek()
        if kind == "phi":
            shape = take()[1]
            charge = 0
            if peek() == "@":
                take()
                charge = parse_int()
            return basis_state(charge, shape).scale(coeff)
        if kind == "vac":
            take()
            if take()[0] != "(":
                raise ValueError("expected vac(<charge>)")
            charge = parse_int()
            if take()[0] != ")":
                raise ValueError("expected vac(<charge>)")
            return vacuum(charge).scale(coeff)
        raise ValueError("expected a basis monomial phi[...] or vac(m)")

    negative = False
    if peek() in ("+", "-"):
        negative = take()[0] == "-"
    state = parse_term()
    if negative:
        state = -state
    while peek() is not None:
        op = take()[0]
        if op not in ("+", "-"):
            raise ValueError(f"unexpected token {op!r} in state literal")
        term = parse_term()
        state = state - term if op == "-" else state + term
    return state
