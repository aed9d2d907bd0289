import random
from fractions import Fraction

import pytest

from conftest import qp, tvec

from tropbend.errors import ResourceExhausted
from tropbend.fields import QQ, PAdicValuation, TAdicValuation, TrivialValuation
from tropbend.polynomials import ideal_graded_piece, tropicalize_poly
from tropbend.semiring import NEG_INF, to_boolean, trop
from tropbend.tropical_linear import (
    TropicalLinearSpace,
    mz_dimension,
    orthogonal_dual,
    span_membership,
    tropicalize_subspace,
)

triv = TrivialValuation(QQ)
XY = ["x", "y"]
XYZ = ["x", "y", "z"]
F = Fraction


def test_single_row_space():
    space = tropicalize_subspace(triv, [[F(1), F(1), F(1)]], 3)
    assert space.rank == 1
    assert space.generators == (tvec([0, 0, 0]),)


def test_binomial_circuit():
    space = tropicalize_subspace(triv, [[F(1), F(-1)]], 2)
    assert space.generators == (tvec([0, 0]),)


def test_plane_circuits():
    # span{x^2+xy, xy+y^2} in basis (x^2, xy, y^2): circuits are the three
    # minimal-support combinations a=0, b=0, a=-b
    space = tropicalize_subspace(triv, [[F(1), F(1), F(0)], [F(0), F(1), F(1)]], 3)
    assert space.rank == 2
    supports = {tuple(i for i, c in enumerate(g) if not c.is_neg_inf) for g in space.generators}
    assert supports == {(0, 1), (1, 2), (0, 2)}


def test_span_membership_examples():
    space = tropicalize_subspace(triv, [[F(1), F(1), F(0)], [F(0), F(1), F(1)]], 3)
    for g in space.generators:
        assert span_membership(g, space)
    single = TropicalLinearSpace(3, (tvec([0, "-inf", "-inf"]),), 1)
    assert not span_membership(tvec([0, 0, 0]), single)
    assert span_membership(tvec(["-inf", "-inf", "-inf"]), single)


def test_span_membership_of_random_subspace_elements(rng):
    # the tropicalization of any element of the subspace lies in the span of
    # the valuated circuits, for every built-in valuation
    cases = [
        (triv, [qp("x^2 + x*y", XY), qp("x*y + y^2", XY)], 2, 2),
        (PAdicValuation(2), [qp("x^2 + 2*x*y + 4*y^2", XY), qp("x*y - 8*y^2", XY)], 2, 2),
        (triv, [qp("x + y + z", XYZ)], 1, 3),
    ]
    for v, gens, d, nvars in cases:
        piece = ideal_graded_piece(gens, d, nvars, F(0))
        space = tropicalize_subspace(v, piece)
        basis = piece.ambient_basis
        for _ in range(50):
            coeffs = [F(rng.randint(-9, 9)) for _ in gens]
            combo = None
            for c, g in zip(coeffs, gens):
                part = g.scale(c)
                combo = part if combo is None else combo + part
            vec = tuple(v(combo.terms.get(m, F(0))) for m in basis)
            assert span_membership(vec, space)


def test_mz_dimension_matches_rank():
    space = tropicalize_subspace(triv, [[F(1), F(1), F(0)], [F(0), F(1), F(1)]], 3)
    assert mz_dimension(space) == 2
    single = TropicalLinearSpace(4, (tvec([0, -1, "-inf", 2]),), 1)
    assert mz_dimension(single) == 1


def test_mz_dimension_boolean_base_change():
    space = tropicalize_subspace(
        PAdicValuation(2), [[F(1), F(2), F(0)], [F(0), F(4), F(1)]], 3
    )
    booleanized = space.map_coefficients(to_boolean)
    assert mz_dimension(space) == mz_dimension(booleanized) == 2


def test_mz_dimension_generator_bound():
    gens = tuple(tvec([0 if i == j else "-inf" for j in range(13)]) for i in range(13))
    space = TropicalLinearSpace(13, gens, 13)
    with pytest.raises(ResourceExhausted):
        mz_dimension(space, max_generators=12)
    assert mz_dimension(space, max_generators=13) == 13


def test_orthogonal_dual_examples():
    dual = orthogonal_dual(triv, [[F(1), F(1), F(1)]], 3)
    assert dual.rank == 2

    piece = ideal_graded_piece([qp("x^2 + x*y + y^2", XYZ)], 2, 3, F(0))
    dual2 = orthogonal_dual(triv, piece)
    assert dual2.rank == piece.ncols - piece.rank == 5

    full = tropicalize_subspace(triv, [[F(1), F(0)], [F(0), F(1)]], 2)
    dual3 = orthogonal_dual(triv, [[F(1), F(0)], [F(0), F(1)]], 2)
    assert full.rank == 2 and dual3.rank == 0 and dual3.generators == ()


def test_rank_is_valuation_independent(rng):
    for _ in range(10):
        rows = [[F(rng.randint(-4, 4)) for _ in range(4)] for _ in range(2)]
        ranks = {
            tropicalize_subspace(v, rows, 4).rank
            for v in (triv, PAdicValuation(2), PAdicValuation(5))
        }
        assert len(ranks) == 1


def test_mz_dimension_equals_rank_on_graded_pieces(rng):
    cases = [
        ([qp("x + y", XY)], 3, 2),
        ([qp("x^2 + x*y + y^2", XYZ)], 2, 3),
        ([qp("x - y", XYZ)], 2, 3),
        ([qp("x^2 - y*z", XYZ), qp("y^2 - x*z", XYZ)], 2, 3),
    ]
    for gens, d, nvars in cases:
        piece = ideal_graded_piece(gens, d, nvars, F(0))
        space = tropicalize_subspace(triv, piece)
        if len(space.generators) <= 12:
            assert mz_dimension(space) == space.rank
