"""Tropical plane curves from the regular subdivision of the Newton polygon.

Each lattice point of the Newton polygon is lifted to its tropical
coefficient; the upper convex hull of the lifted points induces the
subdivision.  Curve vertices are dual to 2-cells, facets are dual to edges
(rays for boundary edges, segments for interior ones), and the multiplicity
of a facet is the lattice length of its dual edge.  Everything is exact
integer/rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .fields import Valuation
from .polynomials import Poly, TropPoly, tropicalize_poly

LatticePoint = Tuple[int, int]
Point2 = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class TropicalCurveFacet:
    """One facet of a tropical plane curve.

    kind is 'segment' (bounded), 'ray', or 'line' (degenerate Newton
    segment); `direction` is primitive, and for rays it points away from the
    anchor vertex.  `multiplicity` is the lattice length of `dual_edge`.
    """

    kind: str
    direction: Tuple[int, int]
    multiplicity: int
    dual_edge: Tuple[LatticePoint, LatticePoint]
    anchor: Point2
    endpoint: Optional[Point2] = None


@dataclass(frozen=True)
class PlaneCurve:
    vertices: Tuple[Point2, ...]
    facets: Tuple[TropicalCurveFacet, ...]


def _primitive(dx, dy) -> Tuple[int, int]:
    dxf, dyf = Fraction(dx), Fraction(dy)
    if dxf == 0 and dyf == 0:
        raise ValueError("zero direction")
    den = dxf.denominator * dyf.denominator // gcd(dxf.denominator, dyf.denominator)
    ix, iy = int(dxf * den), int(dyf * den)
    g = gcd(abs(ix), abs(iy))
    return ix // g, iy // g


def _lattice_length(p: LatticePoint, q: LatticePoint) -> int:
    return gcd(abs(q[0] - p[0]), abs(q[1] - p[1]))


def _convex_hull(points: Sequence[LatticePoint]) -> List[LatticePoint]:
    """Monotone-chain convex hull, counterclockwise, no duplicates."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return list(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: List[LatticePoint] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[LatticePoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _upper_cells(lifted: Dict[LatticePoint, Fraction]) -> List[Tuple[frozenset, Tuple[Fraction, Fraction]]]:
    """Maximal 2-cells of the regular subdivision: for each plane through
    three non-collinear lifted points that dominates all lifted points,
    collect the points lying on it.  Returns (cell point set, (alpha, beta))
    with the plane z = alpha*x + beta*y + gamma."""
    pts = list(lifted)
    cells = {}
    for p1, p2, p3 in combinations(pts, 3):
        det = (p2[0] - p1[0]) * (p3[1] - p1[1]) - (p2[1] - p1[1]) * (p3[0] - p1[0])
        if det == 0:
            continue
        w1, w2, w3 = lifted[p1], lifted[p2], lifted[p3]
        alpha = Fraction((w2 - w1) * (p3[1] - p1[1]) - (w3 - w1) * (p2[1] - p1[1]), det)
        beta = Fraction((w3 - w1) * (p2[0] - p1[0]) - (w2 - w1) * (p3[0] - p1[0]), det)
        gamma = w1 - alpha * p1[0] - beta * p1[1]
        on_plane = []
        is_upper = True
        for q in pts:
            h = alpha * q[0] + beta * q[1] + gamma
            if lifted[q] > h:
                is_upper = False
                break
            if lifted[q] == h:
                on_plane.append(q)
        if is_upper:
            cells[frozenset(on_plane)] = (alpha, beta)
    return list(cells.items())


def curve_from_trop_poly(f: TropPoly) -> PlaneCurve:
    """The corner locus of a tropical polynomial in two variables."""
    if f.nvars != 2:
        raise ValueError("plane curves need exactly two variables")
    lifted = {(m[0], m[1]): c.finite for m, c in f.terms.items()}
    if len(lifted) <= 1:
        return PlaneCurve((), ())

    hull_points = _convex_hull(list(lifted))
    if len(hull_points) <= 2:
        return _degenerate_line_curve(lifted)

    cells = _upper_cells(lifted)
    vertices: Dict[frozenset, Point2] = {}
    polygons: Dict[frozenset, List[LatticePoint]] = {}
    for cell, (alpha, beta) in cells:
        vertices[cell] = (-alpha, -beta)
        polygons[cell] = _convex_hull(list(cell))

    edge_cells: Dict[Tuple[LatticePoint, LatticePoint], List[frozenset]] = {}
    for cell, poly in polygons.items():
        k = len(poly)
        for i in range(k):
            p, q = poly[i], poly[(i + 1) % k]
            key = (p, q) if p <= q else (q, p)
            edge_cells.setdefault(key, []).append(cell)

    facets: List[TropicalCurveFacet] = []
    for (p, q), adjacent in sorted(edge_cells.items()):
        mult = _lattice_length(p, q)
        normal = (-(q[1] - p[1]), q[0] - p[0])
        if len(adjacent) == 2:
            v1, v2 = vertices[adjacent[0]], vertices[adjacent[1]]
            direction = _primitive(v2[0] - v1[0], v2[1] - v1[1])
            facets.append(
                TropicalCurveFacet("segment", direction, mult, (p, q), v1, v2)
            )
        else:
            cell = adjacent[0]
            anchor = vertices[cell]
            poly = polygons[cell]
            cx = Fraction(sum(t[0] for t in poly), len(poly))
            cy = Fraction(sum(t[1] for t in poly), len(poly))
            mid = (Fraction(p[0] + q[0], 2), Fraction(p[1] + q[1], 2))
            outward = normal
            if outward[0] * (cx - mid[0]) + outward[1] * (cy - mid[1]) > 0:
                outward = (-outward[0], -outward[1])
            facets.append(
                TropicalCurveFacet("ray", _primitive(*outward), mult, (p, q), anchor)
            )
    return PlaneCurve(tuple(sorted(set(vertices.values()))), tuple(facets))


def _degenerate_line_curve(lifted: Dict[LatticePoint, Fraction]) -> PlaneCurve:
    """All Newton points collinear: the curve is a union of parallel lines,
    one per segment of the 1-dimensional upper hull."""
    pts = sorted(lifted)
    base = pts[0]
    step = _primitive(pts[-1][0] - base[0], pts[-1][1] - base[1])
    params = sorted((  # position along the segment, in lattice steps
        (p[0] - base[0]) // step[0] if step[0] else (p[1] - base[1]) // step[1], p)
        for p in pts
    )
    hull: List[Tuple[int, LatticePoint]] = []
    for s, p in params:
        while len(hull) >= 2:
            (s1, p1), (s2, p2) = hull[-2], hull[-1]
            if (lifted[p2] - lifted[p1]) * (s - s2) <= (lifted[p] - lifted[p2]) * (s2 - s1):
                hull.pop()
            else:
                break
        hull.append((s, p))
    facets = []
    for (s1, p1), (s2, p2) in zip(hull, hull[1:]):
        # tie line of terms p1, p2: (p1 - p2) . q = w2 - w1
        a = p1[0] - p2[0]
        b = p1[1] - p2[1]
        c = lifted[p2] - lifted[p1]
        anchor = (Fraction(c, a), Fraction(0)) if a else (Fraction(0), Fraction(c, b))
        facets.append(
            TropicalCurveFacet(
                "line",
                _primitive(-b, a),
                _lattice_length(p1, p2),
                (p1, p2),
                anchor,
            )
        )
    return PlaneCurve((), tuple(facets))


def plane_curve_facets(v: Valuation, f: Poly) -> PlaneCurve:
    """Tropical curve of a polynomial in 2 affine variables, or of a
    homogeneous polynomial in 3 (dehomogenized in the last variable)."""
    if not f:
        raise ValueError("the zero polynomial has no tropical curve")
    if f.nvars == 2:
        g = f
    elif f.nvars == 3 and f.is_homogeneous():
        g = Poly(2, {(m[0], m[1]): c for m, c in f.terms.items()})
    else:
        raise ValueError("need 2 affine variables or 3 homogeneous ones")
    tf = tropicalize_poly(v, g)
    if not tf:
        raise ValueError("every coefficient valuates to -inf")
    return curve_from_trop_poly(tf)


def balanced_at_vertices(curve: PlaneCurve) -> bool:
    """Weighted directions away from each vertex must sum to zero."""
    by_vertex: Dict[Point2, List[Tuple[int, int]]] = {}
    for facet in curve.facets:
        if facet.kind == "ray":
            by_vertex.setdefault(facet.anchor, []).append(
                (facet.multiplicity * facet.direction[0], facet.multiplicity * facet.direction[1])
            )
        elif facet.kind == "segment":
            dx, dy = facet.direction
            by_vertex.setdefault(facet.anchor, []).append(
                (facet.multiplicity * dx, facet.multiplicity * dy)
            )
            by_vertex.setdefault(facet.endpoint, []).append(
                (-facet.multiplicity * dx, -facet.multiplicity * dy)
            )
    for vertex, contributions in by_vertex.items():
        if sum(c[0] for c in contributions) != 0 or sum(c[1] for c in contributions) != 0:
            return False
    return True
