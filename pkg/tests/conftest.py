from __future__ import annotations

from fractions import Fraction

import pytest

from tropbend.fields import QQ, QQt
from tropbend.polynomials import TropPoly, monomials_of_degree
from tropbend.problemfile import parse_polynomial
from tropbend.semiring import NEG_INF, TropicalValue, trop


def qp(text: str, names):
    """Rational-coefficient polynomial from source text."""
    return parse_polynomial(text, names, QQ)


def qtp(text: str, names):
    """Q(t)-coefficient polynomial from source text."""
    return parse_polynomial(text, names, QQt)


def tp(nvars: int, terms: dict) -> TropPoly:
    """Tropical polynomial from {monomial: rational-or-'-inf'}."""
    return TropPoly(nvars, {m: trop(c) for m, c in terms.items()})


def tvec(values):
    """Tropical vector from rationals / '-inf' entries."""
    return tuple(trop(v) for v in values)


def poly_vector(f: TropPoly, d: int):
    return f.coefficient_vector(monomials_of_degree(f.nvars, d))


@pytest.fixture
def rng():
    import random

    return random.Random(20240811)
