"""Tropical linear spaces obtained from subspaces over valued fields.

A subspace L over the ground field tropicalizes to the sub-semimodule of
T^N generated by the coefficient-wise valuations of ALL its elements; a
finite presentation is given by the valuated circuits (minimal-support
vectors) of L.  Span membership is decided by residuation, and dimension in
the combination-rewriting sense is computed by brute force over generator
subsets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

from . import linalg
from .errors import ResourceExhausted
from .fields import Valuation
from .polynomials import GradedPiece, Monomial
from .semiring import NEG_INF, TropicalValue, trop

Vector = Tuple[TropicalValue, ...]


def _vector_key(v: Vector):
    return tuple((c.is_neg_inf, c.finite if c.finite is not None else 0) for c in v)


@dataclass(frozen=True)
class TropicalLinearSpace:
    """Finitely generated sub-semimodule of a free T-module.

    Generators are projectively normalized (first finite coordinate 0);
    `rank` is the matroid rank of the subspace the space was built from.
    """

    ambient_size: int
    generators: Tuple[Vector, ...]
    rank: int
    ambient_basis: Optional[Tuple[Monomial, ...]] = None

    def map_coefficients(self, fn: Callable[[TropicalValue], TropicalValue]) -> "TropicalLinearSpace":
        return TropicalLinearSpace(
            self.ambient_size,
            tuple(tuple(fn(c) for c in g) for g in self.generators),
            self.rank,
            self.ambient_basis,
        )


def normalize_projective(v: Sequence[TropicalValue]) -> Vector:
    """Scale so the first finite coordinate is 0; the zero vector is fixed."""
    lead = next((c for c in v if not c.is_neg_inf), None)
    if lead is None:
        return tuple(v)
    return tuple(c / lead for c in v)


def tropicalize_subspace(
    v: Valuation,
    source: Union[GradedPiece, Sequence[Sequence]],
    ncols: Optional[int] = None,
    ambient_basis: Optional[Sequence[Monomial]] = None,
    max_subsets: int = 200_000,
) -> TropicalLinearSpace:
    """Valuate every circuit of the row space of `source`.

    The circuits are computed over the exact ground field, so the result's
    rank is the field rank, independent of the valuation.
    """
    if isinstance(source, GradedPiece):
        rows: Sequence[Sequence] = source.matrix
        ncols = source.ncols
        ambient_basis = source.ambient_basis
    else:
        rows = [list(r) for r in source]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
    zero, one = v.field.zero(), v.field.one()
    reduced, _ = linalg.rref(rows, ncols)
    circuits = linalg.row_space_circuits(reduced, ncols, zero, one, max_subsets=max_subsets)
    gens = sorted(
        {normalize_projective([v(x) for x in circuit]) for circuit in circuits},
        key=_vector_key,
    )
    return TropicalLinearSpace(
        ambient_size=ncols,
        generators=tuple(gens),
        rank=len(reduced),
        ambient_basis=tuple(ambient_basis) if ambient_basis is not None else None,
    )


def residual_scalar(g: Vector, w: Vector) -> TropicalValue:
    """Largest lam with lam*g <= w coordinate-wise; -inf when impossible,
    and -inf for the zero generator (whose multiples never help)."""
    lam: Optional[TropicalValue] = None
    for gj, wj in zip(g, w):
        if gj.is_neg_inf:
            continue
        if wj.is_neg_inf:
            return NEG_INF
        q = wj / gj
        if lam is None or q < lam:
            lam = q
    return NEG_INF if lam is None else lam


def span_membership(w: Sequence[TropicalValue], space: TropicalLinearSpace) -> bool:
    """Residuation test: w lies in the span iff the sum of the maximal
    admissible multiples of the generators reproduces w exactly."""
    w = tuple(w)
    if len(w) != space.ambient_size:
        raise ValueError("vector length does not match the ambient module")
    combo = [NEG_INF] * len(w)
    for g in space.generators:
        lam = residual_scalar(g, w)
        if lam.is_neg_inf:
            continue
        for j, gj in enumerate(g):
            combo[j] = combo[j] + lam * gj
    return tuple(combo) == w


def _support_components(gens: Sequence[Vector], n: int) -> List[List[int]]:
    parent = list(range(len(gens)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    coord_owner = {}
    for i, g in enumerate(gens):
        for j, c in enumerate(g):
            if not c.is_neg_inf:
                if j in coord_owner:
                    a, b = find(coord_owner[j]), find(i)
                    if a != b:
                        parent[a] = b
                else:
                    coord_owner[j] = i
    groups = {}
    for i in range(len(gens)):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def _is_independent(
    vs: List[Vector], ambient: int, rng: random.Random, samples: int
) -> bool:
    """Witness search: vs is independent iff some combination lies in no
    span of a subset omitting one element."""
    if not vs:
        return True
    subsets = [
        TropicalLinearSpace(ambient, tuple(vs[:i] + vs[i + 1 :]), 0)
        for i in range(len(vs))
    ]

    def is_witness(w: Vector) -> bool:
        return all(not span_membership(w, sub) for sub in subsets)

    total = [NEG_INF] * ambient
    for g in vs:
        for j, c in enumerate(g):
            total[j] = total[j] + c
    if is_witness(tuple(total)):
        return True
    for _ in range(samples):
        combo = [NEG_INF] * ambient
        for g in vs:
            lam = trop(rng.randint(-20, 20))
            for j, c in enumerate(g):
                combo[j] = combo[j] + lam * c
        if is_witness(tuple(combo)):
            return True
    return False


def mz_dimension(
    space: TropicalLinearSpace,
    max_generators: int = 12,
    samples: int = 100,
    seed: int = 0,
) -> int:
    """Largest cardinality of an independent subset of the generators.

    Dependence means every combination of the set can be rewritten as a
    combination of a proper subset; the witness search samples the plain sum
    plus `samples` random combinations.  Generators with disjoint supports
    are independent of each other, so the search runs per support-connected
    component and the component maxima add.
    """
    gens = [g for g in dict.fromkeys(space.generators) if any(not c.is_neg_inf for c in g)]
    if len(gens) > max_generators:
        raise ResourceExhausted("mz-dimension generator bound", max_generators, len(gens))
    rng = random.Random(seed)
    total = 0
    for comp in _support_components(gens, space.ambient_size):
        comp_gens = [gens[i] for i in comp]
        best = 0

        def search(start: int, chosen: List[Vector]):
            nonlocal best
            if len(chosen) > best:
                best = len(chosen)
            for k in range(start, len(comp_gens)):
                if len(chosen) + (len(comp_gens) - k) <= best:
                    break
                candidate = chosen + [comp_gens[k]]
                if _is_independent(candidate, space.ambient_size, rng, samples):
                    search(k + 1, candidate)

        search(0, [])
        total += best
    return total


def orthogonal_dual(
    v: Valuation,
    source: Union[GradedPiece, Sequence[Sequence]],
    ncols: Optional[int] = None,
    ambient_basis: Optional[Sequence[Monomial]] = None,
    max_subsets: int = 200_000,
) -> TropicalLinearSpace:
    """Tropicalization of the exact orthogonal complement of the row space."""
    if isinstance(source, GradedPiece):
        rows: Sequence[Sequence] = list(source.matrix)
        ncols = source.ncols
        ambient_basis = source.ambient_basis
    else:
        rows = [list(r) for r in source]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
    zero, one = v.field.zero(), v.field.one()
    kernel = linalg.kernel_basis(rows, ncols, zero, one)
    return tropicalize_subspace(v, kernel, ncols, ambient_basis, max_subsets=max_subsets)
