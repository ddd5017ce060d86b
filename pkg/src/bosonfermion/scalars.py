"""Exact coefficient arithmetic: rationals, Laurent polynomials in t, and Q(t).

The rational backend is gmpy2's mpq when available (much faster), otherwise
the standard library Fraction; both print as "p/q" with the "/q" omitted for
integers.
"""

from math import gcd, lcm
from typing import Union

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rational

RationalLike = Union[int, "Rational"]

ZERO = Rational(0)
ONE = Rational(1)


def rat(numerator: RationalLike, denominator: RationalLike = 1) -> Rational:
    return Rational(numerator, denominator)


def parse_rational(text: str) -> Rational:
    try:
        return Rational(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"invalid rational literal {text!r}") from None


def format_rational(value: Rational) -> str:
    return str(value)


class TLaurent:
    """Laurent polynomial in t with rational coefficients, stored sparsely."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Rational] | None = None):
        self.terms: dict[int, Rational] = {}
        if terms:
            for e, c in terms.items():
                c = Rational(c)
                if c != 0:
                    self.terms[int(e)] = c

    @classmethod
    def zero(cls) -> "TLaurent":
        return cls()

    @classmethod
    def one(cls) -> "TLaurent":
        return cls({0: ONE})

    @classmethod
    def term(cls, coeff: RationalLike, exponent: int = 0) -> "TLaurent":
        return cls({exponent: Rational(coeff)})

    @classmethod
    def t(cls, exponent: int = 1) -> "TLaurent":
        return cls({exponent: ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero Laurent polynomial has no exponents")
        return min(self.terms)

    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero Laurent polynomial has no exponents")
        return max(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self.terms)

    def constant_value(self) -> Rational:
        """The rational value of a constant; error when t appears."""
        if not self.terms:
            return ZERO
        if set(self.terms) != {0}:
            raise ValueError(f"{self} is not a constant")
        return self.terms[0]

    def coefficient(self, exponent: int) -> Rational:
        return self.terms.get(exponent, ZERO)

    def shift(self, k: int) -> "TLaurent":
        return TLaurent({e + k: c for e, c in self.terms.items()})

    def scale(self, factor: RationalLike) -> "TLaurent":
        factor = Rational(factor)
        if factor == 0:
            return TLaurent()
        return TLaurent({e: c * factor for e, c in self.terms.items()})

    def __add__(self, other: "TLaurent") -> "TLaurent":
        merged = dict(self.terms)
        for e, c in other.terms.items():
            s = merged.get(e, ZERO) + c
            if s == 0:
                merged.pop(e, None)
            else:
                merged[e] = s
        out = TLaurent()
        out.terms = merged
        return out

    def __neg__(self) -> "TLaurent":
        return TLaurent({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TLaurent") -> "TLaurent":
        return self + (-other)

    def __mul__(self, other: "TLaurent") -> "TLaurent":
        product: dict[int, Rational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = product.get(e, ZERO) + c1 * c2
                if s == 0:
                    product.pop(e, None)
                else:
                    product[e] = s
        out = TLaurent()
        out.terms = product
        return out

    def __pow__(self, n: int) -> "TLaurent":
        if n < 0:
            raise ValueError("negative powers live in TScalar")
        result = TLaurent.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TLaurent):
            return self.terms == other.terms
        if isinstance(other, int):
            return self == TLaurent.term(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return format_tlaurent(self)

    def __repr__(self) -> str:
        return f"TLaurent({self.terms!r})"


def format_tlaurent(value: TLaurent) -> str:
    if value.is_zero():
        return "0"
    pieces = []
    for e in sorted(value.terms, reverse=True):
        c = value.terms[e]
        negative = c < 0
        mag = -c if negative else c
        if e == 0:
            body = str(mag)
        else:
            tpow = "t" if e == 1 else f"t^{e}"
            body = tpow if mag == 1 else f"{mag}*{tpow}"
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


def _dense(poly: TLaurent) -> list[Rational]:
    """Coefficient list of a polynomial with nonzero constant term."""
    deg = poly.max_exp()
    out = [ZERO] * (deg + 1)
    for e, c in poly.terms.items():
        out[e] = c
    return out


def _from_dense(coeffs: list[Rational]) -> TLaurent:
    return TLaurent({e: c for e, c in enumerate(coeffs) if c != 0})


def _dense_divmod(num: list[Rational], den: list[Rational]):
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [ZERO] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q = c / lead
        quot[i - dd] = q
        for j, dc in enumerate(den):
            num[i - dd + j] -= q * dc
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _int_primitive(coeffs: list[Rational]) -> list[int]:
    """Clear denominators and divide out the integer content."""
    common = 1
    for c in coeffs:
        common = lcm(common, int(c.denominator))
    ints = [int(c * common) for c in coeffs]
    content = 0
    for v in ints:
        content = gcd(content, v)
    return [v // content for v in ints]


def _pseudo_remainder(a: list[int], b: list[int]) -> list[int]:
    r = list(a)
    deg_b = len(b) - 1
    lead_b = b[-1]
    while len(r) - 1 >= deg_b:
        top = r[-1]
        if top == 0:
            r.pop()
            if not r:
                return [0]
            continue
        shift = len(r) - 1 - deg_b
        r = [lead_b * c for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= top * bc
        r.pop()
        if not r:
            return [0]
        content = 0
        for v in r:
            content = gcd(content, v)
        if content > 1:
            r = [v // content for v in r]
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return r


_GCD_PRIME = (1 << 31) - 1


def _modp_gcd_is_trivial(x: list[int], y: list[int]) -> bool:
    """True when the gcd is provably constant, by a single-prime modular image.

    Sound filter: if neither leading coefficient vanishes mod p, the modular
    gcd degree bounds the rational one from above, so a constant image means
    the inputs are coprime.  Inconclusive cases return False and fall through
    to the exact computation.
    """
    p = _GCD_PRIME
    a = [v % p for v in x]
    b = [v % p for v in y]
    if a[-1] == 0 or b[-1] == 0:
        return False
    while True:
        deg_b = len(b) - 1
        inv = pow(b[-1], -1, p)
        r = list(a)
        while len(r) - 1 >= deg_b:
            top = r[-1]
            if top:
                factor = top * inv % p
                shift = len(r) - 1 - deg_b
                for i, bc in enumerate(b):
                    r[shift + i] = (r[shift + i] - factor * bc) % p
            r.pop()
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        if len(r) == 1:
            return r[0] != 0
        a, b = b, r


def _dense_gcd(a: list[Rational], b: list[Rational]) -> list[Rational]:
    """Monic gcd by a primitive pseudo-remainder sequence over the integers."""
    x = _int_primitive(a)
    y = _int_primitive(b)
    if x == y:
        return [Rational(v, x[-1]) for v in x]
    if _modp_gcd_is_trivial(x, y):
        return [Rational(1)]
    while len(y) > 1 or y[0] != 0:
        r = _pseudo_remainder(x, y)
        x, y = y, (_int_primitive(r) if any(r) else [0])
    lead = x[-1]
    return [Rational(v, lead) for v in x]


class TScalar:
    """Element of Q(t) in canonical form.

    The denominator is a monic polynomial with nonzero constant term and is
    coprime to the numerator; Laurent shifts (powers of t) stay in the
    numerator, so the value is a Laurent polynomial exactly when den == 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: TLaurent, den: TLaurent | None = None):
        if den is None:
            den = TLaurent.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def zero(cls) -> "TScalar":
        return cls(TLaurent.zero())

    @classmethod
    def one(cls) -> "TScalar":
        return cls(TLaurent.one())

    @classmethod
    def monomial(cls, coeff: RationalLike, exponent: int = 0) -> "TScalar":
        return cls(TLaurent.term(coeff, exponent))

    @classmethod
    def from_rational(cls, value: RationalLike) -> "TScalar":
        return cls(TLaurent.term(value))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        """True when the value lies in Q[t]."""
        if self.is_zero():
            return True
        return self.den == TLaurent.one() and self.num.min_exp() >= 0

    def is_laurent(self) -> bool:
        return self.den == TLaurent.one()

    def as_laurent(self) -> TLaurent:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def constant_value(self) -> Rational:
        return self.as_laurent().constant_value()

    def t_degree(self):
        """Top t-exponent of the value; None for zero."""
        if self.is_zero():
            return None
        return self.num.max_exp() - self.den.max_exp()

    def __add__(self, other: "TScalar") -> "TScalar":
        return TScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "TScalar":
        out = TScalar.__new__(TScalar)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other: "TScalar") -> "TScalar":
        return self + (-other)

    def __mul__(self, other: "TScalar") -> "TScalar":
        return TScalar(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "TScalar") -> "TScalar":
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(t)")
        return TScalar(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> "TScalar":
        result = TScalar.one()
        base = self
        if n < 0:
            base = TScalar.one() / self
            n = -n
        for _ in range(n):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TScalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (TLaurent, int)):
            return self == TScalar(other if isinstance(other, TLaurent) else TLaurent.term(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den == TLaurent.one():
            return str(self.num)
        num_s = str(self.num)
        den_s = str(self.den)
        if len(self.num.terms) > 1:
            num_s = f"({num_s})"
        if len(self.den.terms) > 1:
            den_s = f"({den_s})"
        return f"{num_s} / {den_s}"

    def __repr__(self) -> str:
        return f"TScalar({self})"


def _canonical(num: TLaurent, den: TLaurent) -> tuple[TLaurent, TLaurent]:
    if num.is_zero():
        return TLaurent.zero(), TLaurent.one()
    if len(den.terms) == 1:
        ((e, c),) = den.terms.items()
        return num.shift(-e).scale(Rational(1) / c), TLaurent.one()
    shift_n = num.min_exp()
    shift_d = den.min_exp()
    f = _dense(num.shift(-shift_n))
    g = _dense(den.shift(-shift_d))
    d = _dense_gcd(f, g)
    if len(d) > 1:
        f, _ = _dense_divmod(f, d)
        g, _ = _dense_divmod(g, d)
    lead = g[-1]
    f = [c / lead for c in f]
    g = [c / lead for c in g]
    return _from_dense(f).shift(shift_n - shift_d), _from_dense(g)


# --- parsing ---------------------------------------------------------------

def _tokenize_scalar(text: str) -> list:
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
        elif ch in "+-*/^()t":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in scalar {text!r}")
    return tokens


class _ScalarParser:
    def __init__(self, tokens: list):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self):
        if self.pos >= len(self.tokens):
            raise ValueError("truncated scalar literal")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> TScalar:
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError("trailing input in scalar literal")
        return value

    def expr(self) -> TScalar:
        value = self.product()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def product(self) -> TScalar:
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self) -> TScalar:
        if self.peek() == "-":
            self.take()
            return -self.factor()
        if self.peek() == "+":
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            kind, value = self.take()
            if kind != "int":
                raise ValueError("expected integer exponent")
            return base ** (sign * value)
        return base

    def atom(self) -> TScalar:
        if self.peek() is None:
            raise ValueError("malformed scalar literal")
        kind, value = self.take()
        if kind == "int":
            return TScalar.monomial(value)
        if kind == "t":
            return TScalar.monomial(1, 1)
        if kind == "(":
            inner = self.expr()
            if self.peek() != ")":
                raise ValueError("missing closing parenthesis")
            self.take()
            return inner
        raise ValueError("malformed scalar literal")


def parse_tscalar(text: str) -> TScalar:
    """Parse any printed TScalar/TLaurent form, e.g. "-9*t^6" or "(t^2 + 1) / t"."""
    return _ScalarParser(_tokenize_scalar(text)).parse()


def parse_tlaurent(text: str) -> TLaurent:
    return parse_tscalar(text).as_laurent()
