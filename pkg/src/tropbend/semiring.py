"""Exact max-plus arithmetic: the tropical semifield T = (Q ∪ {-inf}, max, +)
and its boolean subsemiring B = {-inf, 0}.

Values are immutable and hashable; all operations are pure.  Rationals are
exact (`fractions.Fraction`); there is deliberately no floating-point mode.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction, str]


class TropicalValue:
    """An element of T: either -inf or an exact rational.

    Semiring operators: ``a + b`` is max, ``a * b`` is rational addition,
    with -inf as the additive unit and the absorbing element.  The canonical
    partial order (a <= b iff a + b == b) coincides with the usual total
    order on rationals extended by -inf as least element, and Python's
    comparison operators implement it.
    """

    __slots__ = ("finite",)

    def __init__(self, value: Union[RationalLike, None]):
        if value is None:
            object.__setattr__(self, "finite", None)
        elif isinstance(value, str):
            object.__setattr__(self, "finite", None if value.strip() == "-inf" else Fraction(value))
        else:
            object.__setattr__(self, "finite", Fraction(value))

    def __setattr__(self, name, value):
        raise AttributeError("TropicalValue is immutable")

    @property
    def is_neg_inf(self) -> bool:
        return self.finite is None

    def __bool__(self) -> bool:
        return self.finite is not None

    def __add__(self, other: "TropicalValue") -> "TropicalValue":
        if self.finite is None:
            return other
        if other.finite is None:
            return self
        return self if self.finite >= other.finite else other

    def __mul__(self, other: "TropicalValue") -> "TropicalValue":
        if self.finite is None or other.finite is None:
            return NEG_INF
        return TropicalValue(self.finite + other.finite)

    def __pow__(self, n: int) -> "TropicalValue":
        if self.finite is None:
            return T_ONE if n == 0 else NEG_INF
        return TropicalValue(self.finite * n)

    def inverse(self) -> "TropicalValue":
        if self.finite is None:
            raise ZeroDivisionError("-inf has no multiplicative inverse")
        return TropicalValue(-self.finite)

    def __truediv__(self, other: "TropicalValue") -> "TropicalValue":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, TropicalValue) and self.finite == other.finite

    def __hash__(self) -> int:
        return hash(("trop", self.finite))

    def __le__(self, other: "TropicalValue") -> bool:
        if self.finite is None:
            return True
        if other.finite is None:
            return False
        return self.finite <= other.finite

    def __lt__(self, other: "TropicalValue") -> bool:
        return self <= other and self != other

    def __ge__(self, other: "TropicalValue") -> bool:
        return other <= self

    def __gt__(self, other: "TropicalValue") -> bool:
        return other < self

    def __str__(self) -> str:
        return "-inf" if self.finite is None else str(self.finite)

    def __repr__(self) -> str:
        return f"TropicalValue({str(self)!r})"


class BooleanValue(TropicalValue):
    """An element of the boolean subsemiring B = {-inf, 0} of T."""

    __slots__ = ()

    def __init__(self, value: Union[RationalLike, None]):
        super().__init__(value)
        if self.finite not in (None, Fraction(0)):
            raise ValueError(f"boolean semiring holds only -inf and 0, got {value!r}")

    def __repr__(self) -> str:
        return f"BooleanValue({str(self)!r})"


NEG_INF = TropicalValue(None)
T_ONE = TropicalValue(0)
B_ZERO = BooleanValue(None)
B_ONE = BooleanValue(0)


def trop(value: Union[RationalLike, None, TropicalValue]) -> TropicalValue:
    """Coerce ints, Fractions, strings ('-inf', '5/3') or values to T."""
    if isinstance(value, TropicalValue):
        return value
    return TropicalValue(value)


def trop_add(a: TropicalValue, b: TropicalValue) -> TropicalValue:
    return a + b


def trop_mul(a: TropicalValue, b: TropicalValue) -> TropicalValue:
    return a * b


def trop_leq(a: TropicalValue, b: TropicalValue) -> bool:
    """The canonical order of an idempotent semiring: a <= b iff a + b == b."""
    return a + b == b


def trop_sum(values) -> TropicalValue:
    """Max of a finite family; -inf for the empty family."""
    total = NEG_INF
    for v in values:
        total = total + v
    return total


def to_boolean(a: TropicalValue) -> BooleanValue:
    """The unique semiring map T -> B: -inf stays, every unit goes to 0."""
    return B_ZERO if a.finite is None else B_ONE


def parse_tropical(text: str) -> TropicalValue:
    """Parse '-inf' or a rational literal 'p/q' / 'p'."""
    text = text.strip()
    if text == "-inf":
        return NEG_INF
    try:
        return TropicalValue(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a tropical literal: {text!r}") from exc
