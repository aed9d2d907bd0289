import random
from fractions import Fraction

import pytest

from tropbend.fields import (
    QQ,
    QQt,
    PAdicValuation,
    QPoly,
    RationalFunction,
    TAdicValuation,
    TrivialValuation,
    check_valuation_axioms,
    padic_order,
    valuate,
)
from tropbend.semiring import NEG_INF, trop


def test_qpoly_arithmetic():
    t = QPoly.t_power(1)
    p = t * t + t.scale(3) + QPoly.constant(2)  # t^2 + 3t + 2
    q = t + QPoly.constant(1)
    quo, rem = p.divmod(q)
    assert not rem and quo == t + QPoly.constant(2)
    assert p.gcd(q) == q  # gcd is monic (t + 1)
    assert (t * t + t).low_order() == 1


def test_rational_function_canonical_form():
    t = RationalFunction.t()
    one = RationalFunction.constant(1)
    x = (t * t - one) / (t - one)  # reduces to t + 1
    assert x == t + one
    y = (t + one).__truediv__(RationalFunction.constant(2) * t + RationalFunction.constant(2))
    assert y == RationalFunction.constant(Fraction(1, 2))
    assert str(x.den) == "1"
    with pytest.raises(ZeroDivisionError):
        x / RationalFunction.constant(0)


def test_padic_examples():
    v2 = PAdicValuation(2)
    assert valuate(v2, Fraction(12)) == trop(-2)
    assert valuate(v2, Fraction(1, 2)) == trop(1)
    assert valuate(v2, Fraction(0)) == NEG_INF
    assert padic_order(Fraction(12), 2) == 2


def test_padic_requires_prime():
    with pytest.raises(ValueError):
        PAdicValuation(6)
    PAdicValuation(7)


def test_tadic_examples():
    vt = TAdicValuation()
    t = RationalFunction.t()
    assert valuate(vt, t * t + t * t * t) == trop(-2)
    assert valuate(vt, RationalFunction.constant(1) / t) == trop(1)
    assert valuate(vt, RationalFunction.constant(0)) == NEG_INF
    assert valuate(vt, RationalFunction.constant(0) - t) == trop(-1)


def test_trivial_examples():
    triv = TrivialValuation(QQ)
    assert valuate(triv, Fraction(5)) == trop(0)
    assert valuate(triv, Fraction(0)) == NEG_INF


def _samples(field, rng, n):
    return [(field.random(rng), field.random(rng)) for _ in range(n)]


@pytest.mark.parametrize(
    "valuation",
    [TrivialValuation(QQ), PAdicValuation(2), PAdicValuation(5), TAdicValuation()],
    ids=["trivial", "2-adic", "5-adic", "t-adic"],
)
def test_valuation_axioms_on_samples(valuation, rng):
    samples = _samples(valuation.field, rng, 300)
    assert check_valuation_axioms(valuation, samples)


def test_subadditivity_can_drop_on_cancellation():
    vt = TAdicValuation()
    t = RationalFunction.t()
    zero = RationalFunction.constant(0)
    # nu(t + (-t)) = -inf <= max(nu(t), nu(-t))
    assert check_valuation_axioms(vt, [(t, zero - t)])


def test_non_degenerate():
    for v in (TrivialValuation(QQ), PAdicValuation(3)):
        assert v(Fraction(0)) == NEG_INF
        for x in (Fraction(7, 3), Fraction(-9), Fraction(1, 12)):
            assert v(x) != NEG_INF


def test_booleanized_valuation():
    v2 = PAdicValuation(2)
    bv = v2.booleanized()
    assert bv(Fraction(12)) == trop(0)
    assert bv(Fraction(0)) == NEG_INF
    samples = [(Fraction(3), Fraction(5)), (Fraction(-1), Fraction(1)), (Fraction(4), Fraction(-4))]
    assert check_valuation_axioms(bv, samples)
