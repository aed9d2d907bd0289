from fractions import Fraction
from math import comb

import pytest

from conftest import qp, tp

from tropbend.fields import QQ, TAdicValuation, TrivialValuation
from tropbend.polynomials import (
    classical_hilbert,
    ideal_graded_piece,
    monomials_of_degree,
    tropicalize_poly,
)
from tropbend.problemfile import parse_polynomial
from tropbend.semiring import trop


XY = ["x", "y"]
XYZ = ["x", "y", "z"]


def test_field_poly_product():
    f = qp("x + y", XY)
    g = qp("x - y", XY)
    assert f * g == qp("x^2 - y^2", XY)


def test_trop_poly_idempotent_square():
    f = tp(2, {(1, 0): 0, (0, 1): 0})  # x + y
    sq = f * f
    assert sq == tp(2, {(2, 0): 0, (1, 1): 0, (0, 2): 0})


def test_trop_scalar_distribution():
    f = tp(2, {(1, 0): 0, (0, 1): 0})
    assert f.scale(trop(3)) == tp(2, {(1, 0): 3, (0, 1): 3})


def test_trop_addition_never_cancels():
    f = tp(1, {(0,): 5})
    g = tp(1, {(0,): 2, (1,): 1})
    assert (f + g) == tp(1, {(0,): 5, (1,): 1})


def test_tropicalize_poly_examples():
    triv = TrivialValuation(QQ)
    f = qp("x^2 + x*y + y^2", XY)
    assert tropicalize_poly(triv, f) == tp(2, {(2, 0): 0, (1, 1): 0, (0, 2): 0})

    vt = TAdicValuation()
    from tropbend.fields import QQt

    g = parse_polynomial("x^2 + x*y + t*y^2", XY, QQt)
    assert tropicalize_poly(vt, g) == tp(2, {(2, 0): 0, (1, 1): 0, (0, 2): -1})

    zero = qp("x - x", XY)
    assert not tropicalize_poly(triv, zero)


def test_monomial_multiples_commute_with_valuation():
    vt = TAdicValuation()
    from tropbend.fields import QQt

    g = parse_polynomial("x^2 + t*x*y + y^2", XY, QQt)
    tg = tropicalize_poly(vt, g)
    shifted = tropicalize_poly(vt, g.mono_shift((2, 1)))
    assert shifted == tg.mono_shift((2, 1))


def test_graded_lex_basis_order():
    assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert monomials_of_degree(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_graded_piece_of_line():
    piece = ideal_graded_piece([qp("x + y", XY)], 2, 2, Fraction(0))
    assert piece.rank == 2
    # row space should contain x^2 + xy and xy + y^2
    from tropbend.linalg import rank

    rows = [list(r) for r in piece.matrix]
    for extra in ([1, 1, 0], [0, 1, 1]):
        assert rank(rows + [[Fraction(c) for c in extra]], 3) == 2


def test_graded_piece_single_generator():
    piece = ideal_graded_piece([qp("x^2 + x*y + y^2", XYZ)], 2, 3, Fraction(0))
    assert piece.rank == 1


def test_graded_piece_degree_zero():
    piece = ideal_graded_piece([qp("x^2 + x*y + y^2", XYZ)], 0, 3, Fraction(0))
    assert piece.rank == 0


def test_graded_piece_order_independent():
    gens_a = [qp("x^2 - y*z", XYZ), qp("y^2 - x*z", XYZ)]
    gens_b = list(reversed(gens_a))
    pa = ideal_graded_piece(gens_a, 3, 3, Fraction(0))
    pb = ideal_graded_piece(gens_b, 3, 3, Fraction(0))
    assert pa == pb  # echelon canonicity


def test_classical_hilbert_examples():
    f = qp("x^2 + x*y + y^2", XYZ)
    assert classical_hilbert([f], 2, 3, Fraction(0)) == 5
    assert classical_hilbert([f], 3, 3, Fraction(0)) == 7
    assert classical_hilbert([], 3, 2, Fraction(0)) == 4


@pytest.mark.parametrize("nvars,e", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 2), (4, 3)])
def test_hypersurface_hilbert_formula(nvars, e, rng):
    # degree-e hypersurface in nvars variables: C(d+n, n) - C(d-e+n, n)
    n = nvars - 1
    terms = {}
    for m in monomials_of_degree(nvars, e):
        terms[m] = Fraction(rng.randint(1, 5))
    from tropbend.polynomials import Poly

    f = Poly(nvars, terms)
    for d in range(e, 9 - nvars):
        expected = comb(d + n, n) - comb(d - e + n, n)
        assert classical_hilbert([f], d, nvars, Fraction(0)) == expected


def test_homogeneity_required():
    with pytest.raises(ValueError):
        ideal_graded_piece([qp("x^2 + y", XY)], 2, 2, Fraction(0))
