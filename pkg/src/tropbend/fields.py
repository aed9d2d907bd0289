"""Exact valued ground fields: Q, Q with a p-adic valuation, and Q(t) with
the t-adic valuation, each mapping into the tropical semifield.

The max-plus sign convention is used throughout: nu_p(x) = -(p-adic order),
nu_t(x) = -(t-adic order), so subadditivity reads nu(a+b) <= max(nu(a), nu(b))
and "small" elements take very negative values.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from .semiring import NEG_INF, B_ONE, B_ZERO, T_ONE, BooleanValue, TropicalValue, to_boolean


class QPoly:
    """Dense univariate polynomial over Q, used to build Q(t).

    Coefficients are stored low degree first with no trailing zeros; the
    zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[int, Fraction]] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @staticmethod
    def constant(c) -> "QPoly":
        return QPoly([Fraction(c)])

    @staticmethod
    def t_power(n: int) -> "QPoly":
        return QPoly([0] * n + [1])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def low_order(self) -> int:
        """Exponent of the lowest nonzero term; raises on zero."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise ValueError("zero polynomial has no t-adic order")

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __add__(self, other: "QPoly") -> "QPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    def scale(self, c) -> "QPoly":
        c = Fraction(c)
        return QPoly([a * c for a in self.coeffs])

    def divmod(self, other: "QPoly") -> Tuple["QPoly", "QPoly"]:
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        den = other.coeffs
        q = [Fraction(0)] * max(len(rem) - len(den) + 1, 0)
        for shift in range(len(rem) - len(den), -1, -1):
            factor = rem[shift + len(den) - 1] / den[-1]
            if factor != 0:
                q[shift] = factor
                for i, d in enumerate(den):
                    rem[shift + i] -= factor * d
        return QPoly(q), QPoly(rem)

    def gcd(self, other: "QPoly") -> "QPoly":
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        if not a:
            return a
        return a.scale(1 / a.lead())  # monic

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("qpoly", self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                tpow = "t" if i == 1 else f"t^{i}"
                if c == 1:
                    parts.append(tpow)
                elif c == -1:
                    parts.append(f"-{tpow}")
                else:
                    parts.append(f"{c}*{tpow}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


class RationalFunction:
    """An element of Q(t), kept gcd-reduced with a monic denominator so that
    equality is literal equality of the stored pair."""

    __slots__ = ("num", "den")

    def __init__(self, num: QPoly, den: QPoly = QPoly([1])):
        if not den:
            raise ZeroDivisionError("zero denominator in Q(t)")
        if not num:
            object.__setattr__(self, "num", QPoly())
            object.__setattr__(self, "den", QPoly([1]))
            return
        g = num.gcd(den)
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
        lead = den.lead()
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def constant(c) -> "RationalFunction":
        return RationalFunction(QPoly.constant(c))

    @staticmethod
    def t() -> "RationalFunction":
        return RationalFunction(QPoly.t_power(1))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if not other:
            raise ZeroDivisionError("division by zero in Q(t)")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash(("qt", self.num, self.den))

    def __str__(self) -> str:
        if self.den == QPoly([1]):
            return str(self.num)
        return f"({self.num})/({self.den})"


class RationalField:
    """The field Q with `fractions.Fraction` elements."""

    name = "Q"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def random(self, rng: random.Random) -> Fraction:
        num = rng.randint(-30, 30)
        den = rng.randint(1, 12)
        return Fraction(num, den)

    def random_nonzero(self, rng: random.Random) -> Fraction:
        while True:
            x = self.random(rng)
            if x:
                return x

    def __repr__(self) -> str:
        return "QQ"


class RationalFunctionField:
    """The field Q(t) with `RationalFunction` elements."""

    name = "Q(t)"

    def zero(self) -> RationalFunction:
        return RationalFunction(QPoly())

    def one(self) -> RationalFunction:
        return RationalFunction.constant(1)

    def from_int(self, n: int) -> RationalFunction:
        return RationalFunction.constant(n)

    def random(self, rng: random.Random) -> RationalFunction:
        num = QPoly([Fraction(rng.randint(-9, 9)) for _ in range(rng.randint(1, 4))])
        den = QPoly([Fraction(rng.randint(-9, 9)) for _ in range(rng.randint(1, 3))])
        if not den:
            den = QPoly([1])
        return RationalFunction(num, den)

    def random_nonzero(self, rng: random.Random) -> RationalFunction:
        while True:
            x = self.random(rng)
            if x:
                return x

    def __repr__(self) -> str:
        return "QQt"


QQ = RationalField()
QQt = RationalFunctionField()

GroundFieldElement = Union[Fraction, RationalFunction]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def padic_order(x: Fraction, p: int) -> int:
    """Exponent of p in x; raises on zero."""
    if x == 0:
        raise ValueError("zero has no p-adic order")
    order = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        order += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        order -= 1
    return order


class Valuation:
    """A valuation nu: k -> T (or B), exact on field elements.

    Subclasses fix the field and the rule; ``__call__`` is total and
    non-degenerate: nu(x) = -inf iff x = 0.
    """

    field: Union[RationalField, RationalFunctionField]
    name: str

    def __call__(self, x: GroundFieldElement) -> TropicalValue:
        raise NotImplementedError

    def booleanized(self) -> "BooleanizedValuation":
        """Compose with the semiring map T -> B (base change of values)."""
        return BooleanizedValuation(self)

    def __repr__(self) -> str:
        return self.name


class TrivialValuation(Valuation):
    """nu(x) = 0 for x != 0.  Targets B (equivalently its image in T)."""

    def __init__(self, field=QQ):
        self.field = field
        self.name = "trivial"

    def __call__(self, x: GroundFieldElement) -> TropicalValue:
        return B_ONE if x else B_ZERO


class PAdicValuation(Valuation):
    """nu(x) = -(p-adic order of x) on Q, -inf at 0."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.field = QQ
        self.name = f"{p}-adic"

    def __call__(self, x: Fraction) -> TropicalValue:
        if not x:
            return NEG_INF
        return TropicalValue(-padic_order(Fraction(x), self.p))


class TAdicValuation(Valuation):
    """nu(x) = (lowest t-exponent of the denominator) - (of the numerator)."""

    def __init__(self):
        self.field = QQt
        self.name = "t-adic"

    def __call__(self, x: RationalFunction) -> TropicalValue:
        if not x:
            return NEG_INF
        return TropicalValue(x.den.low_order() - x.num.low_order())


class BooleanizedValuation(Valuation):
    """to_boolean composed with an inner valuation; values land in B."""

    def __init__(self, inner: Valuation):
        self.inner = inner
        self.field = inner.field
        self.name = f"bool({inner.name})"

    def __call__(self, x: GroundFieldElement) -> BooleanValue:
        return to_boolean(self.inner(x))


def valuate(v: Valuation, x: GroundFieldElement) -> TropicalValue:
    return v(x)


def check_valuation_axioms(
    v: Valuation, samples: Sequence[Tuple[GroundFieldElement, GroundFieldElement]]
) -> bool:
    """Check the unit, multiplicativity and subadditivity axioms on every
    sampled pair, together with the strict-inequality consequence: whenever
    nu(a) < nu(b), nu(a+b) equals max(nu(a), nu(b)) exactly."""
    zero = v.field.zero()
    one = v.field.one()
    if v(zero) != NEG_INF:
        return False
    if v(one) != T_ONE or v(zero - one) != T_ONE:
        return False
    for a, b in samples:
        va, vb = v(a), v(b)
        if v(a * b) != va * vb:
            return False
        vab = v(a + b)
        if vab + va + vb != va + vb:  # subadditivity, stated additively
            return False
        if va != vb and vab != va + vb:
            return False
    return True
