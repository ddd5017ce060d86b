"""Localized equivariant model of the Hilbert-scheme / point-variety picture.

The fixed points of the n-th space are labeled by partitions of n.  A class on
the fixed-point side (QuiverClass) is a Q[t]-combination of point classes
1_shape; a class on the ambient side (LocalizedClass) is stored through its
restrictions to the fixed points, one Q(t) value per partition of n, so that
pullback-of-pushforward multiplies by the tangent Euler class as an identity
of stored values.

Weight convention: a one-dimensional module of weight a has Euler class a*t,
and the distinguished curve direction in the plane carries weight -1.  This is
the unique choice reproducing both the tangent Euler class
(-1)^n h(shape)^2 t^(2n) and the curve relation checked by c2_toy_check.
"""

import json
from functools import cache

from .boson import BosonPolynomial, oscillator, schur, schur_expand
from .fermion import FermionState
from .partitions import (
    Partition,
    add_box,
    addable_boxes,
    boxes,
    cartan_apply,
    dimension_vector,
    hook,
    hook_product,
    parse_partition,
    partitions_of,
    remove_box,
    removable_boxes,
)
from .scalars import (
    Rational,
    TLaurent,
    TScalar,
    ZERO,
    parse_tscalar,
)


class NonDivisibleCoefficient(ValueError):
    """Raised when a lowering operator would leave the polynomial grading."""


class DegreeUnderflow(ValueError):
    """Raised when an annihilation operator would need a space of negative size."""


class QuiverClass:
    """Q[t]-combination of fixed-point classes, one coefficient per partition."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Partition, TLaurent] | None = None):
        self.terms: dict[Partition, TLaurent] = {}
        if terms:
            for shape, coeff in terms.items():
                if coeff.is_zero():
                    continue
                if not coeff.is_polynomial():
                    raise ValueError(
                        f"coefficient {coeff} of 1@{shape} is not in Q[t]"
                    )
                self.terms[shape] = coeff

    @classmethod
    def zero(cls) -> "QuiverClass":
        return cls()

    @classmethod
    def unit(cls, shape: Partition) -> "QuiverClass":
        """The class 1 on the point labeled by shape."""
        return cls({Partition(shape): TLaurent.one()})

    @classmethod
    def graded_unit(cls, shape: Partition) -> "QuiverClass":
        """The distinguished basis vector t^|shape| * 1_shape."""
        shape = Partition(shape)
        return cls({shape: TLaurent.t(shape.size())})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, shape: Partition) -> TLaurent:
        return self.terms.get(shape, TLaurent.zero())

    def sizes(self) -> set[int]:
        return {shape.size() for shape in self.terms}

    def homogeneous_size(self) -> int:
        sizes = self.sizes()
        if len(sizes) != 1:
            raise ValueError("class mixes partitions of different sizes")
        return sizes.pop()

    def __add__(self, other: "QuiverClass") -> "QuiverClass":
        merged = dict(self.terms)
        for shape, coeff in other.terms.items():
            merged[shape] = merged.get(shape, TLaurent.zero()) + coeff
        return QuiverClass(merged)

    def __neg__(self) -> "QuiverClass":
        return QuiverClass({s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "QuiverClass") -> "QuiverClass":
        return self + (-other)

    def scale(self, factor) -> "QuiverClass":
        if not isinstance(factor, TLaurent):
            factor = TLaurent.term(factor)
        return QuiverClass({s: c * factor for s, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuiverClass):
            return self.terms == other.terms
        return NotImplemented

    def __str__(self) -> str:
        return format_quiver(self)

    def __repr__(self) -> str:
        return f"QuiverClass<{self}>"

    def to_json(self) -> dict:
        return {
            "coefficients": {
                str(shape): str(self.terms[shape])
                for shape in sorted(self.terms, key=_shape_sort_key)
            }
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuiverClass":
        terms = {}
        for key, value in data.get("coefficients", {}).items():
            terms[parse_partition(key)] = parse_tscalar(value).as_laurent()
        return cls(terms)


class LocalizedClass:
    """Class on the n-th ambient space, stored by fixed-point restrictions."""

    __slots__ = ("n", "restrictions")

    def __init__(self, n: int, restrictions: dict[Partition, TScalar] | None = None):
        self.n = int(n)
        self.restrictions: dict[Partition, TScalar] = {}
        for shape, value in (restrictions or {}).items():
            if shape.size() != self.n:
                raise ValueError(f"partition {shape} does not have size {self.n}")
            if not value.is_zero():
                self.restrictions[shape] = value

    @classmethod
    def zero(cls, n: int) -> "LocalizedClass":
        return cls(n)

    def is_zero(self) -> bool:
        return not self.restrictions

    def restriction(self, shape: Partition) -> TScalar:
        if shape.size() != self.n:
            raise ValueError(f"partition {shape} does not have size {self.n}")
        return self.restrictions.get(shape, TScalar.zero())

    def _check_same_space(self, other: "LocalizedClass") -> None:
        if self.n != other.n:
            raise ValueError(f"classes live on different spaces: n={self.n} vs n={other.n}")

    def __add__(self, other: "LocalizedClass") -> "LocalizedClass":
        self._check_same_space(other)
        merged = dict(self.restrictions)
        for shape, value in other.restrictions.items():
            merged[shape] = merged.get(shape, TScalar.zero()) + value
        return LocalizedClass(self.n, merged)

    def __neg__(self) -> "LocalizedClass":
        return LocalizedClass(self.n, {s: -v for s, v in self.restrictions.items()})

    def __sub__(self, other: "LocalizedClass") -> "LocalizedClass":
        return self + (-other)

    def scale(self, factor) -> "LocalizedClass":
        if not isinstance(factor, TScalar):
            factor = TScalar.monomial(factor)
        return LocalizedClass(self.n, {s: v * factor for s, v in self.restrictions.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LocalizedClass):
            return self.n == other.n and self.restrictions == other.restrictions
        return NotImplemented

    def __str__(self) -> str:
        return json.dumps(self.to_json())

    def __repr__(self) -> str:
        return f"LocalizedClass<n={self.n}, {self.restrictions}>"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "restrictions": {
                str(shape): str(self.restriction(shape)) for shape in partitions_of(self.n)
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "LocalizedClass":
        n = int(data["n"])
        restrictions = {
            parse_partition(key): parse_tscalar(value)
            for key, value in data.get("restrictions", {}).items()
        }
        return cls(n, restrictions)


def _shape_sort_key(shape: Partition):
    return (shape.size(), tuple(-p for p in shape))


# --- Euler classes and the intersection pairing -------------------------------

@cache
def euler_class(shape: Partition) -> TScalar:
    """Tangent Euler class at a fixed point: the box-by-box product of
    (hook * t)(-hook * t), cross-checked against (-1)^n h^2 t^(2n)."""
    product = TScalar.one()
    for box in boxes(shape):
        h = hook(shape, box)
        product = product * TScalar.monomial(h, 1) * TScalar.monomial(-h, 1)
    n = shape.size()
    closed = TScalar.monomial((-1) ** n * hook_product(shape) ** 2, 2 * n)
    if product != closed:
        raise AssertionError(f"Euler class mismatch at {shape}")
    return product


def pushforward(shape: Partition, value: TScalar, n: int | None = None) -> LocalizedClass:
    """Image of a fixed-point class in the ambient space: restriction
    value * e_T at its own point, zero at every other fixed point."""
    shape = Partition(shape)
    if n is None:
        n = shape.size()
    if shape.size() != n:
        raise ValueError(f"partition {shape} does not have size {n}")
    return LocalizedClass(n, {shape: value * euler_class(shape)})


def pullback(alpha: LocalizedClass, shape: Partition) -> TScalar:
    """Restriction of the class to the fixed point labeled by shape."""
    return alpha.restriction(Partition(shape))


def cup(alpha: LocalizedClass, beta: LocalizedClass) -> LocalizedClass:
    """Cup product: pointwise product of restrictions."""
    alpha._check_same_space(beta)
    terms = {}
    for shape, value in alpha.restrictions.items():
        other = beta.restrictions.get(shape)
        if other is not None:
            terms[shape] = value * other
    return LocalizedClass(alpha.n, terms)


def integrate(alpha: LocalizedClass) -> TScalar:
    """Pushforward to a point: the fixed-point sum of restriction / Euler class."""
    total = TScalar.zero()
    for shape, value in alpha.restrictions.items():
        total = total + value / euler_class(shape)
    return total


def fundamental_class(shape: Partition) -> LocalizedClass:
    """The class of the fixed point itself, i_!(1)."""
    return pushforward(shape, TScalar.one())


@cache
def normalized_class(shape: Partition) -> LocalizedClass:
    """Sign-and-hook normalized point class; these are orthonormal for the
    bilinear form below and correspond to Schur polynomials."""
    shape = Partition(shape)
    n = shape.size()
    h = hook_product(shape)
    scale = TScalar.monomial(Rational((-1) ** n, h), -n)
    result = fundamental_class(shape).scale(scale)
    expected = TScalar.monomial(h, n)
    if pullback(result, shape) != expected:
        raise AssertionError(f"normalized class mismatch at {shape}")
    return result


def bilinear_form(alpha: LocalizedClass, beta: LocalizedClass) -> TScalar:
    """Intersection pairing (-1)^n * integral of the cup product."""
    alpha._check_same_space(beta)
    value = integrate(cup(alpha, beta))
    return -value if alpha.n % 2 else value


# --- lowering/raising operators on the fixed-point side -----------------------

def hecke_e(k: int, c: QuiverClass) -> QuiverClass:
    """Remove the unique removable box of residue k (when present) and divide
    the coefficient by t; coefficients must stay in Q[t]."""
    result = QuiverClass.zero()
    for shape, coeff in c.terms.items():
        for box in removable_boxes(shape, k):
            lowered = coeff.shift(-1)
            if not lowered.is_polynomial():
                raise NonDivisibleCoefficient(
                    f"coefficient {coeff} at {shape} is not divisible by t"
                )
            result = result + QuiverClass({remove_box(shape, box): lowered})
    return result


def hecke_f(k: int, c: QuiverClass) -> QuiverClass:
    """Add the unique addable box of residue k (when present) and multiply
    the coefficient by t."""
    result = QuiverClass.zero()
    for shape, coeff in c.terms.items():
        for box in addable_boxes(shape, k):
            result = result + QuiverClass({add_box(shape, box): coeff.shift(1)})
    return result


def point_variety_dimension(counts: dict[int, int]) -> int:
    """2 v_0 - v . C v for a dimension vector v; zero for every v from a partition."""
    support = set(counts)
    return 2 * counts.get(0, 0) - sum(counts[k] * cartan_apply(counts, k) for k in support)


def weight_of(shape: Partition) -> dict[int, int]:
    """Pairing of the point's weight with each simple coroot over the support
    window of its dimension vector widened by one."""
    counts = dimension_vector(Partition(shape))
    if counts:
        lo, hi = min(counts) - 1, max(counts) + 1
    else:
        lo = hi = 0
    return {
        k: (1 if k == 0 else 0) - cartan_apply(counts, k)
        for k in range(lo, hi + 1)
    }


def quiver_form(a: QuiverClass, b: QuiverClass) -> Rational:
    """Bilinear form for which the graded units t^|shape| 1_shape are orthonormal."""
    total = ZERO
    for shape, coeff in a.terms.items():
        other = b.terms.get(shape)
        if other is None:
            continue
        total += _graded_coordinate(coeff, shape) * _graded_coordinate(other, shape)
    return total


def _graded_coordinate(coeff: TLaurent, shape: Partition) -> Rational:
    value = coeff.shift(-shape.size())
    try:
        return value.constant_value()
    except ValueError:
        raise ValueError(
            f"coefficient {coeff} at {shape} is not a multiple of t^{shape.size()}"
        ) from None


# --- the three maps of the correspondence -------------------------------------

def tau(state: FermionState) -> QuiverClass:
    """Charge-zero monomials map to the graded units t^|shape| 1_shape."""
    result = QuiverClass.zero()
    for mono, coeff in state.terms.items():
        if mono.charge != 0:
            raise ValueError("tau is defined on charge-zero states only")
        result = result + QuiverClass.graded_unit(mono.shape).scale(coeff)
    return result


def eta(c: QuiverClass, n: int | None = None) -> LocalizedClass:
    """Localization map sending the graded unit of shape to its normalized
    point class, extended Q[t]-linearly in the identified grading."""
    if c.is_zero():
        return LocalizedClass.zero(0 if n is None else n)
    size = c.homogeneous_size()
    if n is not None and n != size:
        raise ValueError(f"class has size {size}, expected {n}")
    result = LocalizedClass.zero(size)
    for shape, coeff in c.terms.items():
        ratio = TScalar(coeff, TLaurent.t(size))
        result = result + normalized_class(shape).scale(ratio)
    return result


def eta_raw(c: QuiverClass) -> LocalizedClass:
    """The un-identified pushforward form of eta, kept for degree audits: its
    value is t^n times the value of eta."""
    if c.is_zero():
        return LocalizedClass.zero(0)
    size = c.homogeneous_size()
    result = LocalizedClass.zero(size)
    for shape, coeff in c.terms.items():
        scale = TScalar.monomial(Rational((-1) ** size, hook_product(shape)), -size)
        result = result + pushforward(shape, TScalar(coeff) * scale)
    return result


def eta_inverse(beta: LocalizedClass) -> QuiverClass:
    """Read the fixed-point coordinates back into the graded basis."""
    terms = {}
    for shape, value in beta.restrictions.items():
        coeff = value / TScalar.monomial(hook_product(shape))
        if not coeff.is_laurent() or not coeff.as_laurent().is_polynomial():
            raise ValueError(
                f"restriction {value} at {shape} does not come from a class in Q[t]"
            )
        terms[shape] = coeff.as_laurent()
    return QuiverClass(terms)


def _schur_coordinates(beta: LocalizedClass) -> dict[Partition, Rational]:
    """Rational coordinates of a class in the normalized point basis."""
    coords = {}
    denominator = TScalar.monomial(1, beta.n)
    for shape, value in beta.restrictions.items():
        ratio = value / (TScalar.monomial(hook_product(shape)) * denominator)
        try:
            coords[shape] = ratio.constant_value()
        except ValueError:
            raise ValueError(
                f"restriction {value} at {shape} is not in the span of the "
                "normalized point classes over Q"
            ) from None
    return coords


def phi(beta: LocalizedClass) -> BosonPolynomial:
    """Expand in normalized point classes and send each to its Schur polynomial."""
    result = BosonPolynomial.zero()
    for shape, coeff in _schur_coordinates(beta).items():
        result = result + schur(shape).scale(coeff)
    return result


def phi_inverse(f: BosonPolynomial, n: int | None = None) -> LocalizedClass:
    """Schur-expand a homogeneous q^0 polynomial and assemble the restrictions."""
    f.require_q0()
    if f.is_zero():
        return LocalizedClass.zero(0 if n is None else n)
    degree = f.p_degree()
    if n is not None and n != degree:
        raise ValueError(f"polynomial has degree {degree}, expected {n}")
    result = LocalizedClass.zero(degree)
    for shape, coeff in schur_expand(f).items():
        result = result + normalized_class(shape).scale(TScalar.monomial(coeff))
    return result


# --- geometric bosons ----------------------------------------------------------

@cache
def _boson_on_basis(k: int, shape: Partition) -> tuple[tuple[Partition, Rational], ...]:
    """Transport of the oscillator generator through phi on a basis class."""
    image = phi_inverse(oscillator(k, phi(normalized_class(shape))))
    return tuple(sorted(_schur_coordinates(image).items(), key=lambda kv: _shape_sort_key(kv[0])))


def geometric_boson(k: int, beta: LocalizedClass) -> LocalizedClass:
    """Heisenberg operator on localized classes, realized by transport through
    the Schur dictionary; index 0 acts as zero, negative indices raise n."""
    if k == 0:
        return LocalizedClass.zero(beta.n)
    if k > beta.n:
        raise DegreeUnderflow(f"cannot lower degree {beta.n} by {k}")
    target = beta.n - k
    coords: dict[Partition, Rational] = {}
    for shape, coeff in _schur_coordinates(beta).items():
        for out_shape, out_coeff in _boson_on_basis(k, shape):
            s = coords.get(out_shape, ZERO) + coeff * out_coeff
            if s == 0:
                coords.pop(out_shape, None)
            else:
                coords[out_shape] = s
    return LocalizedClass(
        target,
        {
            shape: TScalar.monomial(coeff * hook_product(shape), target)
            for shape, coeff in coords.items()
        },
    )


def power_sum_class(shape: Partition) -> LocalizedClass:
    """The class obtained by applying the raising operators of shape to the
    vacuum class on X_0; pairs to delta * z under the bilinear form."""
    result = normalized_class(Partition())
    for part in Partition(shape):
        result = geometric_boson(-part, result)
    return result


# --- the two-dimensional toy model --------------------------------------------

def c2_toy_model(curve_weight: int = -1) -> dict[str, TScalar]:
    """One-fixed-point model of the plane: tangent weights (w, -w) along the
    distinguished curve and its normal direction."""
    w = curve_weight
    tangent_euler = TScalar.monomial(w, 1) * TScalar.monomial(-w, 1)
    curve_class = TScalar.monomial(-w, 1)  # normal Euler class at the point
    point_class = tangent_euler
    return {
        "tangent_euler": tangent_euler,
        "curve_restriction": curve_class,
        "point_restriction": point_class,
    }


def c2_toy_check(curve_weight: int = -1) -> bool:
    """Does the curve class equal -t^(-1) times the point class in the model?"""
    model = c2_toy_model(curve_weight)
    expected = TScalar.monomial(-1, -1) * model["point_restriction"]
    return model["curve_restriction"] == expected


# --- text form of fixed-point classes -------------------------------------------

def format_quiver(c: QuiverClass) -> str:
    if c.is_zero():
        return "0"
    pieces = []
    for shape in sorted(c.terms, key=_shape_sort_key):
        coeff = c.terms[shape]
        basis = f"1@{shape}"
        sign = ""
        if len(coeff.terms) > 1:
            body = f"({coeff})*{basis}"
        else:
            ((e, value),) = coeff.terms.items()
            negative = value < 0
            mag = -value if negative else value
            sign = "-" if negative else ""
            if e == 0:
                body = basis if mag == 1 else f"{mag}*{basis}"
            else:
                tpow = "t" if e == 1 else f"t^{e}"
                body = f"{tpow}*{basis}" if mag == 1 else f"{mag}*{tpow}*{basis}"
        if not pieces:
            pieces.append(sign + body)
        else:
            pieces.append(("- " if sign == "-" else "+ ") + body)
    return " ".join(pieces)


def _tokenize_quiver(text: str) -> list:
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
        elif ch == "@":
            j = text.find("]", i)
            if j < 0:
                raise ValueError(f"unterminated partition in {text!r}")
            tokens.append(("at", parse_partition(text[i + 1:j + 1])))
            i = j + 1
        elif ch in "+-*/^()t":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in class {text!r}")
    return tokens


def parse_quiver(text: str) -> QuiverClass:
    """Parse printed fixed-point classes like "t*1@[1] + 2*t^2*1@[2]"."""
    text = text.strip()
    if text == "0":
        return QuiverClass.zero()
    tokens = _tokenize_quiver(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"truncated class literal {text!r}")
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_scalar_factor() -> TLaurent:
        kind, value = take()
        if kind == "int":
            base = TLaurent.term(value)
        elif kind == "t":
            base = TLaurent.t()
        elif kind == "(":
            base = parse_sum_laurent()
            if take()[0] != ")":
                raise ValueError("missing closing parenthesis")
        else:
            raise ValueError(f"unexpected token {kind!r} in class literal")
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            kind, value = take()
            if kind != "int":
                raise ValueError("expected integer exponent")
            if sign < 0:
                raise ValueError("fixed-point coefficients live in Q[t]")
            base = base**value
        return base

    def parse_sum_laurent() -> TLaurent:
        value = parse_product_laurent()
        while peek() in ("+", "-"):
            op = take()[0]
            rhs = parse_product_laurent()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_product_laurent() -> TLaurent:
        negative = False
        while peek() in ("+", "-"):
            if take()[0] == "-":
                negative = not negative
        value = parse_scalar_factor()
        while peek() == "*" and pos + 1 < len(tokens) and tokens[pos + 1][0] != "at":
            take()
            value = value * parse_scalar_factor()
        return -value if negative else value

    def parse_term() -> QuiverClass:
        negative = False
        while peek() in ("+", "-"):
            if take()[0] == "-":
                negative = not negative
        coeff = TLaurent.one()
        seen_basis = None
        while True:
            nxt = peek()
            if nxt is None:
                break
            if nxt == "at":
                raise ValueError("misplaced @ in class literal")
            if nxt in ("+", "-") and seen_basis is not None:
                break
            factor_is_basis = False
            if nxt == "int" and tokens[pos][1] == 1 and pos + 1 < len(tokens) and tokens[pos + 1][0] == "at":
                take()
                shape = take()[1]
                seen_basis = shape
                factor_is_basis = True
            else:
                coeff = coeff * parse_scalar_factor()
            if peek() == "*":
                take()
                continue
            if factor_is_basis:
                break
        if seen_basis is None:
            raise ValueError("each term needs a basis factor 1@[...]")
        if negative:
            coeff = -coeff
        return QuiverClass({seen_basis: coeff})

    result = parse_term()
    while peek() is not None:
        op = take()[0]
        if op not in ("+", "-"):
            raise ValueError(f"unexpected token {op!r} in class literal")
        term = parse_term()
        result = result - term if op == "-" else result + term
    return result
