"""Bend relations of tropical polynomials, tropical vanishing, canonical
univariate factorization, and recovery of a polynomial from its bend
congruence.

The bend relations of f are the pairs f ~ f-with-one-term-deleted, one per
support monomial; for a monomial the single relation is f ~ -inf, matching
the convention that a one-term polynomial "vanishes" only at -inf.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .errors import RecoveryError
from .polynomials import Monomial, TropPoly, grlex_key
from .semiring import NEG_INF, T_ONE, TropicalValue

Vector = Tuple[TropicalValue, ...]


@dataclass(frozen=True)
class BendRelationSet:
    """The relations {f ~ f_with_term_a_deleted : a in supp(f)}."""

    source: TropPoly
    pairs: Tuple[Tuple[TropPoly, TropPoly], ...]

    def vector_pairs(self, basis: Sequence[Monomial]) -> List[Tuple[Vector, Vector]]:
        return [
            (lhs.coefficient_vector(basis), rhs.coefficient_vector(basis))
            for lhs, rhs in self.pairs
        ]


def bend_relations(f: TropPoly) -> BendRelationSet:
    if not f:
        raise ValueError("the zero polynomial has no bend relations")
    pairs = tuple((f, f.delete_term(a)) for a in f.support())
    return BendRelationSet(source=f, pairs=pairs)


def bend_congruence_pairs(g: TropPoly, basis: Sequence[Monomial]) -> List[Tuple[Vector, Vector]]:
    """Generating pairs for the module congruence of the bend relations of g.

    For a two-term g = a*m1 + b*m2 the single transposition a*m1 ~ b*m2 is
    used; it generates the same congruence as the two deletion pairs (add
    either term to both sides, idempotently) and makes witnesses in
    containment reports read like the binomial relation they express.
    """
    supp = g.support()
    if len(supp) == 2:
        m1, m2 = supp
        lhs = TropPoly(g.nvars, {m1: g.terms[m1]})
        rhs = TropPoly(g.nvars, {m2: g.terms[m2]})
        return [(lhs.coefficient_vector(basis), rhs.coefficient_vector(basis))]
    return bend_relations(g).vector_pairs(basis)


def tropically_vanishes(f: TropPoly, point: Sequence[TropicalValue]) -> bool:
    """True iff the maximum of the terms of f at the point is attained at
    least twice, or the value is -inf."""
    if len(point) != f.nvars:
        raise ValueError("point arity mismatch")
    values = [f.term_value(m, point) for m in f.terms]
    best = NEG_INF
    for v in values:
        best = best + v
    if best.is_neg_inf:
        return True
    return sum(1 for v in values if v == best) >= 2


@dataclass(frozen=True)
class UnivariateCanonicalForm:
    """c * prod of linear factors; a root t stands for the factor 0 + t^-1 x
    and a -inf root for the bare factor x."""

    scalar: TropicalValue
    roots: Tuple[TropicalValue, ...]

    def expand(self) -> TropPoly:
        prod = TropPoly(1, {(sum(1 for t in self.roots if t.is_neg_inf),): T_ONE})
        for t in self.roots:
            if not t.is_neg_inf:
                prod = prod * TropPoly(1, {(0,): T_ONE, (1,): t.inverse()})
        return prod.scale(self.scalar)


def univariate_canonical_form(f: TropPoly) -> UnivariateCanonicalForm:
    """Split a nonzero univariate tropical polynomial into linear factors.

    The finite roots are the negated slopes of the upper convex hull of the
    coefficient points (exponent, coefficient); each hull segment contributes
    its horizontal length as the multiplicity.  Coefficients strictly below
    the hull do not affect the function and are inert.  The lowest exponent
    contributes that many -inf roots, and the scalar is chosen so the top
    coefficients match; the expansion is then functionally equal to f.
    """
    if f.nvars != 1:
        raise ValueError("canonical form is defined for univariate polynomials")
    if not f:
        raise ValueError("the zero polynomial has no canonical form")
    pts = sorted((m[0], c.finite) for m, c in f.terms.items())
    e_min = pts[0][0]
    hull: List[Tuple[int, Fraction]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it is on or under chord (x1,y1)-(p)
            if (y2 - y1) * (p[0] - x2) <= (p[1] - y2) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    roots: List[TropicalValue] = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = Fraction(y2 - y1, x2 - x1)
        roots.extend([TropicalValue(-slope)] * (x2 - x1))
    roots.extend([NEG_INF] * e_min)
    roots.sort(reverse=True)
    unscaled = UnivariateCanonicalForm(T_ONE, tuple(roots)).expand()
    e_max = max(m[0] for m in f.terms)
    scalar = f.terms[(e_max,)] / unscaled.terms[(e_max,)]
    return UnivariateCanonicalForm(scalar, tuple(roots))


_PLUS_INF = object()
_ALL = (None, None)


def _equal_set(A: TropicalValue, B: TropicalValue, C: TropicalValue, D: TropicalValue):
    """Solution set in finite r of max(A+r, B) == max(C+r, D).

    Returns None for empty, else (lo, hi) with None meaning unbounded on
    that side.  The set is always an interval: the difference of the two
    sides is monotone piecewise linear in r.
    """
    a, b, c, d = A.finite, B.finite, C.finite, D.finite
    if a is None and c is None:
        return _ALL if b == d else None
    if a is None:  # left side is the constant B
        if b is None or (d is not None and d > b):
            return None
        if d == b:
            return (None, b - c)
        return (b - c, b - c)
    if c is None:  # mirror image
        if d is None or (b is not None and b > d):
            return None
        if b == d:
            return (None, d - a)
        return (d - a, d - a)
    if b is None and d is None:
        return _ALL if a == c else None
    if d is None:  # h(r) = C + r
        if a == c:
            return (b - a, None)
        if a < c:
            return (b - c, b - c)
        return None
    if b is None:  # g(r) = A + r
        if a == c:
            return (d - c, None)
        if c < a:
            return (d - a, d - a)
        return None
    # all four finite: bends at b1 (left side) and b2 (right side)
    b1, b2 = b - a, d - c
    pieces = []
    if b == d:
        pieces.append((None, min(b1, b2)))
    if b1 <= b2:
        r0 = d - a
        if b1 <= r0 <= b2:
            pieces.append((r0, r0))
    if b2 <= b1:
        r0 = b - c
        if b2 <= r0 <= b1:
            pieces.append((r0, r0))
    if a == c:
        pieces.append((max(b1, b2), None))
    if not pieces:
        return None
    lo = None if any(p[0] is None for p in pieces) else min(p[0] for p in pieces)
    hi = None if any(p[1] is None for p in pieces) else max(p[1] for p in pieces)
    return (lo, hi)


def _pair_ratio_interval(pairs, i: int, j: int):
    """Intersect, over all generating pairs, the admissible r = phi_i - phi_j
    for a two-index evaluation point supported on {i, j}."""
    lo, hi = None, None
    for u, v in pairs:
        got = _equal_set(u[i], u[j], v[i], v[j])
        if got is None:
            return None
        g_lo, g_hi = got
        if g_lo is not None and (lo is None or g_lo > lo):
            lo = g_lo
        if g_hi is not None and (hi is None or g_hi < hi):
            hi = g_hi
        if lo is not None and hi is not None and lo > hi:
            return None
    return (lo, hi)


def recover_from_bend(
    source: Union[BendRelationSet, Sequence[Tuple[Vector, Vector]], "object"],
    support: Sequence[Monomial],
) -> TropPoly:
    """Recover g with g proportional to f from the bend congruence of f.

    `source` is either a BendRelationSet, a list of generating vector pairs
    over the support basis, or a tropical linear space of dual points.  The
    coefficient of each pair of support monomials is pinned by the two-index
    evaluation maps that descend to the quotient; the ratios are propagated
    from the first support element (normalized to coefficient 0) and checked
    for consistency.
    """
    basis = sorted(support, key=grlex_key)
    n = len(basis)
    if n == 0:
        raise RecoveryError("empty support")
    nvars = len(basis[0])
    deltas = {}  # (i, j) -> a_j - a_i, from single-point ratio intervals
    checks = {}  # wider intervals to validate afterwards

    generators = getattr(source, "generators", None)
    if generators is not None and not isinstance(source, BendRelationSet):
        # dual-point generating set: two-index points give a_i + p_i = a_j + p_j
        for p in generators:
            finite = [k for k in range(n) if not p[k].is_neg_inf]
            if len(finite) == 2:
                i, j = finite
                deltas[(i, j)] = (p[i] / p[j]).finite
    else:
        if isinstance(source, BendRelationSet):
            pairs = source.vector_pairs(basis)
        else:
            pairs = list(source)
        for i in range(n):
            for j in range(i + 1, n):
                interval = _pair_ratio_interval(pairs, i, j)
                if interval is None:
                    raise RecoveryError(
                        f"no two-index evaluation exists on support pair ({i}, {j})"
                    )
                lo, hi = interval
                if lo is not None and lo == hi:
                    deltas[(i, j)] = lo
                else:
                    checks[(i, j)] = interval

    coeffs: List[Optional[Fraction]] = [None] * n
    coeffs[0] = Fraction(0)
    frontier = [0]
    adjacency = {}
    for (i, j), r in deltas.items():
        adjacency.setdefault(i, []).append((j, r))
        adjacency.setdefault(j, []).append((i, -r))
    while frontier:
        i = frontier.pop()
        for j, delta in adjacency.get(i, ()):
            value = coeffs[i] + delta
            if coeffs[j] is None:
                coeffs[j] = value
                frontier.append(j)
            elif coeffs[j] != value:
                raise RecoveryError("inconsistent coefficient ratios")
    if any(c is None for c in coeffs):
        raise RecoveryError("ratio system does not determine all coefficients")
    for (i, j), (lo, hi) in checks.items():
        r = coeffs[j] - coeffs[i]
        if (lo is not None and r < lo) or (hi is not None and r > hi):
            raise RecoveryError("inconsistent coefficient ratios")
    return TropPoly(nvars, {m: TropicalValue(c) for m, c in zip(basis, coeffs)})
