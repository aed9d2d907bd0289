import random
from fractions import Fraction

import pytest

from conftest import tp, tvec

from tropbend.bend import (
    bend_congruence_pairs,
    bend_relations,
    recover_from_bend,
    tropically_vanishes,
    univariate_canonical_form,
)
from tropbend.congruences import ModuleCongruence, one_step_member
from tropbend.errors import RecoveryError
from tropbend.polynomials import TropPoly, monomials_of_degree
from tropbend.semiring import NEG_INF, T_ONE, TropicalValue, trop


def test_bend_relations_three_terms():
    f = tp(3, {(1, 0, 0): 1, (0, 1, 0): 2, (0, 0, 1): 3})  # a1 x + a2 y + a3 z
    rels = bend_relations(f)
    assert len(rels.pairs) == 3
    deleted = {rhs for _, rhs in rels.pairs}
    assert tp(3, {(0, 1, 0): 2, (0, 0, 1): 3}) in deleted
    assert tp(3, {(1, 0, 0): 1, (0, 0, 1): 3}) in deleted
    assert tp(3, {(1, 0, 0): 1, (0, 1, 0): 2}) in deleted
    assert all(lhs == f for lhs, _ in rels.pairs)


def test_bend_relations_monomial():
    f = tp(1, {(2,): 0})
    rels = bend_relations(f)
    assert len(rels.pairs) == 1
    assert rels.pairs[0] == (f, TropPoly(1, {}))


def test_bend_relations_two_terms():
    f = tp(2, {(1, 0): 0, (0, 1): 0})
    rels = bend_relations(f)
    assert {rhs for _, rhs in rels.pairs} == {tp(2, {(1, 0): 0}), tp(2, {(0, 1): 0})}


def test_bend_relations_reject_zero():
    with pytest.raises(ValueError):
        bend_relations(TropPoly(2, {}))


def test_tropically_vanishes_examples():
    f = tp(2, {(1, 0): 0, (0, 1): 0, (0, 0): 0})  # x + y + 0
    assert tropically_vanishes(f, tvec([0, 0]))
    assert not tropically_vanishes(f, tvec([2, 0]))
    g = tp(1, {(1,): 0})
    assert tropically_vanishes(g, (NEG_INF,))
    assert not tropically_vanishes(g, tvec([1]))


def test_vanishing_iff_bend_pairs_respected():
    rng = random.Random(7)
    for _ in range(40):
        nterms = rng.randint(1, 4)
        monos = rng.sample(monomials_of_degree(2, 3), nterms)
        f = TropPoly(2, {m: trop(rng.randint(-3, 3)) for m in monos})
        point = tuple(
            NEG_INF if rng.random() < 0.2 else trop(rng.randint(-2, 2)) for _ in range(2)
        )
        respects = all(lhs(point) == rhs(point) for lhs, rhs in bend_relations(f).pairs)
        assert respects == tropically_vanishes(f, point)


def test_canonical_form_examples():
    f = tp(1, {(2,): 0, (1,): 3, (0,): 0})
    form = univariate_canonical_form(f)
    assert form.scalar == T_ONE
    assert sorted(r.finite for r in form.roots) == [-3, 3]

    g = tp(1, {(2,): 0, (1,): -5, (0,): 0})
    form = univariate_canonical_form(g)
    assert form.scalar == T_ONE
    assert [r.finite for r in form.roots] == [0, 0]

    h = tp(1, {(2,): 0})
    form = univariate_canonical_form(h)
    assert form.scalar == T_ONE
    assert list(form.roots) == [NEG_INF, NEG_INF]


def test_canonical_form_roots_sorted_descending():
    f = tp(1, {(3,): 0, (2,): 5, (0,): 0})
    roots = univariate_canonical_form(f).roots
    finite = [r for r in roots if not r.is_neg_inf]
    assert finite == sorted(finite, reverse=True)
    assert all(r.is_neg_inf for r in roots[len(finite):])


def test_canonical_form_functional_equality():
    rng = random.Random(11)
    for _ in range(30):
        degree = rng.randint(1, 6)
        terms = {}
        for e in range(degree + 1):
            if rng.random() < 0.7 or e == degree:
                terms[(e,)] = trop(Fraction(rng.randint(-12, 12), rng.randint(1, 3)))
        f = TropPoly(1, terms)
        expanded = univariate_canonical_form(f).expand()
        sample_points = [trop(Fraction(k, 3)) for k in range(-30, 31)] + [NEG_INF]
        for x in sample_points:
            assert f((x,)) == expanded((x,))


def test_canonical_form_inert_coefficient():
    # max(2x, x-5, 0) = max(2x, 0) everywhere
    f = tp(1, {(2,): 0, (1,): -5, (0,): 0})
    g = tp(1, {(2,): 0, (0,): 0})
    assert univariate_canonical_form(f).roots == univariate_canonical_form(g).roots


def _congruence_of(f: TropPoly, d: int) -> ModuleCongruence:
    basis = tuple(monomials_of_degree(f.nvars, d))
    return ModuleCongruence(len(basis), tuple(bend_relations(f).vector_pairs(basis)), basis)


def test_recover_from_bend_examples():
    basis1 = monomials_of_degree(2, 1)
    f = tp(2, {(1, 0): 3, (0, 1): 0})  # 3x + 0y
    got = recover_from_bend(bend_relations(f).vector_pairs(basis1), basis1)
    assert got.terms[(1, 0)] / got.terms[(0, 1)] == trop(3)

    g = tp(3, {(1, 0, 0): 0, (0, 1, 0): 0, (0, 0, 1): 0})
    basis = monomials_of_degree(3, 1)
    got = recover_from_bend(bend_relations(g).vector_pairs(basis), basis)
    vals = set(got.terms.values())
    assert len(vals) == 1

    h = tp(2, {(2, 0): 0, (1, 1): -1, (0, 2): -3})
    basis2 = monomials_of_degree(2, 2)
    got = recover_from_bend(bend_relations(h).vector_pairs(basis2), basis2)
    lead = got.terms[(2, 0)]
    assert [(got.terms[m] / lead).finite for m in basis2] == [0, -1, -3]


def test_recover_from_dual_points():
    # dual two-index points of 3x + 0y: p_xy = (-3, 0) up to scale
    from tropbend.tropical_linear import TropicalLinearSpace

    dual = TropicalLinearSpace(2, (tvec([-3, 0]),), 1)
    got = recover_from_bend(dual, monomials_of_degree(2, 1))
    assert got.terms[(1, 0)] / got.terms[(0, 1)] == trop(3)


def test_recover_random_full_support(rng):
    for _ in range(100):
        nvars = rng.choice([2, 3])
        d = rng.choice([1, 2])
        basis = monomials_of_degree(nvars, d)
        f = TropPoly(nvars, {m: trop(Fraction(rng.randint(-20, 20), rng.randint(1, 4))) for m in basis})
        got = recover_from_bend(bend_relations(f).vector_pairs(basis), basis)
        ratios = {m: (got.terms[m] / f.terms[m]).finite for m in basis}
        assert len(set(ratios.values())) == 1  # proportional exactly


def test_recover_reports_inconsistent_input():
    basis = monomials_of_degree(2, 1)
    # x ~ -inf and y ~ -inf: a point-like congruence, not a bend congruence
    zero = tvec(["-inf", "-inf"])
    pairs = [(tvec([0, "-inf"]), zero), (tvec(["-inf", 0]), zero)]
    with pytest.raises(RecoveryError):
        recover_from_bend(pairs, basis)


def test_scaling_invariance_of_bend_congruence(rng):
    # B(lam*f) and B(f) generate the same congruence: mutual one-step membership
    basis = monomials_of_degree(2, 2)
    for _ in range(25):
        f = TropPoly(2, {m: trop(rng.randint(-5, 5)) for m in basis if rng.random() < 0.8})
        if not f:
            continue
        lam = trop(rng.randint(-4, 4))
        cf = _congruence_of(f, 2)
        cg = _congruence_of(f.scale(lam), 2)
        for pair in cg.pairs:
            assert one_step_member(pair, cf)
        for pair in cf.pairs:
            assert one_step_member(pair, cg)


def test_two_term_presentation_is_equivalent():
    from tropbend.congruences import congruence_member

    basis = monomials_of_degree(2, 1)
    f = tp(2, {(1, 0): 2, (0, 1): 0})
    transposition = ModuleCongruence(2, tuple(bend_congruence_pairs(f, basis)), tuple(basis))
    deletions = _congruence_of(f, 1)
    for pair in deletions.pairs:
        assert congruence_member(pair, transposition) is True
    for pair in transposition.pairs:
        # the transposition chains through the two deletion relations
        assert congruence_member(pair, deletions) is True
