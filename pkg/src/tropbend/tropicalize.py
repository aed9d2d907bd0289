"""The pipeline from a homogeneous ideal over a valued field to its graded
tropicalization.

Per degree d the pipeline assembles three views of the tropicalized ideal:
the tropical linear space spanned by the valuated circuits of the classical
graded piece, the module congruence generated by the bend relations of those
circuits, and the tropicalization of the orthogonal complement (the solution
space).  Degrees are computed lazily and cached, since different queries
need different slices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .bend import bend_congruence_pairs, tropically_vanishes
from .congruences import ModuleCongruence, congruence_contains, congruence_member
from .errors import RecoveryError
from .fields import Valuation
from .polynomials import (
    GradedPiece,
    Monomial,
    Poly,
    TropPoly,
    classical_hilbert,
    ideal_graded_piece,
    monomials_of_degree,
    tropicalize_poly,
)
from .semiring import NEG_INF, TropicalValue
from .tropical_linear import (
    TropicalLinearSpace,
    mz_dimension,
    orthogonal_dual,
    span_membership,
    tropicalize_subspace,
)

from .bend import recover_from_bend


@dataclass
class PipelineOptions:
    """Bounds for the enumerative parts of the pipeline; every bound is
    surfaced as a CLI flag."""

    circuit_budget: int = 200_000
    mz_max_generators: int = 64
    mz_samples: int = 100
    max_chain: Optional[int] = None
    max_states: int = 20_000


def default_max_degree(gens: Sequence[Poly]) -> int:
    return sum(g.degree() for g in gens if g) + 1 if gens else 1


class GradedTropicalIdeal:
    """Degree-graded scheme-theoretic tropicalization of a homogeneous ideal."""

    def __init__(
        self,
        valuation: Valuation,
        gens: Sequence[Poly],
        nvars: int,
        max_degree: int,
        options: Optional[PipelineOptions] = None,
    ):
        for g in gens:
            if g and not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")
        self.valuation = valuation
        self.gens = [g for g in gens if g]
        self.nvars = nvars
        self.max_degree = max_degree
        self.options = options or PipelineOptions()
        self._pieces: Dict[int, GradedPiece] = {}
        self._spaces: Dict[int, TropicalLinearSpace] = {}
        self._bends: Dict[int, ModuleCongruence] = {}
        self._duals: Dict[int, TropicalLinearSpace] = {}

    def _check_degree(self, d: int):
        if d < 0 or d > self.max_degree:
            raise ValueError(f"degree {d} outside the computed range 0..{self.max_degree}")

    def graded_piece(self, d: int) -> GradedPiece:
        self._check_degree(d)
        if d not in self._pieces:
            self._pieces[d] = ideal_graded_piece(
                self.gens, d, self.nvars, self.valuation.field.zero()
            )
        return self._pieces[d]

    def trop_space(self, d: int) -> TropicalLinearSpace:
        if d not in self._spaces:
            self._spaces[d] = tropicalize_subspace(
                self.valuation, self.graded_piece(d), max_subsets=self.options.circuit_budget
            )
        return self._spaces[d]

    def trop_space_polys(self, d: int) -> List[TropPoly]:
        space = self.trop_space(d)
        basis = space.ambient_basis
        return [TropPoly.from_vector(g, basis, self.nvars) for g in space.generators]

    def bend_congruence(self, d: int) -> ModuleCongruence:
        if d not in self._bends:
            space = self.trop_space(d)
            basis = space.ambient_basis
            pairs = []
            for g in self.trop_space_polys(d):
                pairs.extend(bend_congruence_pairs(g, basis))
            self._bends[d] = ModuleCongruence(len(basis), tuple(pairs), basis)
        return self._bends[d]

    def dual_space(self, d: int) -> TropicalLinearSpace:
        if d not in self._duals:
            self._duals[d] = orthogonal_dual(
                self.valuation, self.graded_piece(d), max_subsets=self.options.circuit_budget
            )
        return self._duals[d]

    def classical_hilbert(self, d: int) -> int:
        piece = self.graded_piece(d)
        return len(piece.ambient_basis) - piece.rank


def tropicalize_ideal(
    v: Valuation,
    gens: Sequence[Poly],
    max_degree: Optional[int] = None,
    nvars: Optional[int] = None,
    options: Optional[PipelineOptions] = None,
) -> GradedTropicalIdeal:
    if nvars is None:
        if not gens:
            raise ValueError("need nvars for the zero ideal")
        nvars = gens[0].nvars
    if max_degree is None:
        max_degree = default_max_degree(gens)
    for g in gens:
        if g and g.degree() > max_degree:
            raise ValueError("max_degree is below a generator degree")
    return GradedTropicalIdeal(v, gens, nvars, max_degree, options)


def tropical_hilbert(T: GradedTropicalIdeal, d: int) -> int:
    """Dimension (in the combination-rewriting sense) of the degree-d
    solution space; coincides with the classical Hilbert function."""
    dual = T.dual_space(d)
    return mz_dimension(
        dual,
        max_generators=T.options.mz_max_generators,
        samples=T.options.mz_samples,
    )


def tropicalize_point(v: Valuation, coords: Sequence) -> List[TropicalValue]:
    """Coordinate-wise valuation of a point: the relations x_i ~ nu(p_i)."""
    return [v(c) for c in coords]


def principal_bend_congruence(v: Valuation, f: Poly, d: int) -> ModuleCongruence:
    """The degree-d part of the congruence generated by the bend relations of
    nu(f) alone: it is generated by the bend relations of the monomial
    multiples m*nu(f) with deg(m) = d - deg(f)."""
    if not f or not f.is_homogeneous():
        raise ValueError("need a nonzero homogeneous polynomial")
    e = f.degree()
    if d < e:
        return ModuleCongruence(
            len(monomials_of_degree(f.nvars, d)),
            (),
            tuple(monomials_of_degree(f.nvars, d)),
        )
    basis = tuple(monomials_of_degree(f.nvars, d))
    tf = tropicalize_poly(v, f)
    pairs = []
    for m in monomials_of_degree(f.nvars, d - e):
        shifted = tf.mono_shift(m)
        if shifted:
            pairs.extend(bend_congruence_pairs(shifted, basis))
    return ModuleCongruence(len(basis), tuple(pairs), basis)


def recover_hypersurface(T: GradedTropicalIdeal) -> TropPoly:
    """Recover nu(f), up to a scalar, from the degree-e bend congruence of a
    principal ideal (f) of degree e."""
    if len(T.gens) != 1:
        raise RecoveryError("recovery needs a principal ideal")
    e = T.gens[0].degree()
    cong = T.bend_congruence(e)
    basis = cong.ambient_basis
    support_idx = sorted(
        {
            j
            for u, w in cong.pairs
            for j, c in enumerate(u)
            if not c.is_neg_inf
        }
        | {
            j
            for u, w in cong.pairs
            for j, c in enumerate(w)
            if not c.is_neg_inf
        }
    )
    if not support_idx:
        raise RecoveryError("empty congruence")
    support = [basis[j] for j in support_idx]
    pairs = [
        (tuple(u[j] for j in support_idx), tuple(w[j] for j in support_idx))
        for u, w in cong.pairs
    ]
    return recover_from_bend(pairs, support)


def _induced_vanishing(polys: Sequence[TropPoly], point: Sequence[TropicalValue]) -> bool:
    return all(tropically_vanishes(g, point) for g in polys)


@dataclass
class DegreeBasisReport:
    degree: int
    basis_verdict: Optional[bool]  # sum of principal tropicalizations contains B-trop(I)_d
    basis_witness: Optional[Tuple]
    bend_generation_verdict: Optional[bool]  # bend relations of the nu(f_i) suffice
    bend_generation_witness: Optional[Tuple]
    set_agreement: bool


@dataclass
class BasisCheckReport:
    degrees: List[DegreeBasisReport] = field(default_factory=list)

    def overall(self) -> Dict[str, Optional[bool]]:
        def agg(values):
            if any(v is False for v in values):
                return False
            if any(v is None for v in values):
                return None
            return True

        return {
            "scheme_theoretic_basis": agg([r.basis_verdict for r in self.degrees]),
            "bend_generation": agg([r.bend_generation_verdict for r in self.degrees]),
            "set_theoretic_agreement": all(r.set_agreement for r in self.degrees),
        }


def _sound_intersection_points(duals: Sequence[TropicalLinearSpace]) -> List[Tuple[TropicalValue, ...]]:
    """Points guaranteed to respect the sum of the principal congruences:
    generators of one solution space that lie in all the others."""
    if not duals:
        return []
    out = []
    seen = set()
    for i, di in enumerate(duals):
        for p in di.generators:
            if p in seen:
                continue
            if all(span_membership(p, dj) for j, dj in enumerate(duals) if j != i):
                seen.add(p)
                out.append(p)
    return out


def default_grid(nvars: int, lo: int = -2, hi: int = 2) -> List[Tuple[TropicalValue, ...]]:
    from itertools import product

    vals = [TropicalValue(k) for k in range(lo, hi + 1)]
    return [tuple(p) for p in product(vals, repeat=nvars)]


def tropical_basis_check(
    v: Valuation,
    gens: Sequence[Poly],
    max_degree: Optional[int] = None,
    options: Optional[PipelineOptions] = None,
    grid: Optional[Sequence[Tuple[TropicalValue, ...]]] = None,
) -> BasisCheckReport:
    """Per-degree verdicts on whether the generators cut out the whole
    tropicalized ideal: (i) via the tropicalizations of the principal ideals
    they generate, (ii) via their bend relations alone, and (iii) a sampled
    set-theoretic comparison of vanishing loci on a grid."""
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("basis check needs at least one generator")
    options = options or PipelineOptions()
    if max_degree is None:
        max_degree = default_max_degree(gens)
    T = tropicalize_ideal(v, gens, max_degree, options=options)
    principals = [tropicalize_ideal(v, [g], max_degree, options=options) for g in gens]
    trop_gens = [tropicalize_poly(v, g) for g in gens]
    if grid is None:
        grid = default_grid(gens[0].nvars)

    report = BasisCheckReport()
    for d in range(0, max_degree + 1):
        C2 = T.bend_congruence(d)
        basis = tuple(monomials_of_degree(gens[0].nvars, d))

        # (i) sum of the principal-ideal tropicalizations
        pairs_i = []
        for P in principals:
            pairs_i.extend(P.bend_congruence(d).pairs)
        C1 = ModuleCongruence(len(basis), tuple(pairs_i), basis)
        duals = [P.dual_space(d) for P in principals]
        sound_points = _sound_intersection_points(duals)
        verdict_i, witness_i = _containment_with_point_refutation(
            C1, C2, sound_points, options
        )

        # (ii) bend relations of the generators themselves
        pairs_ii = []
        for g in gens:
            pairs_ii.extend(principal_bend_congruence(v, g, d).pairs)
        C1b = ModuleCongruence(len(basis), tuple(pairs_ii), basis)
        verdict_ii, witness_ii = _containment_with_point_refutation(
            C1b, C2, sound_points, options
        )

        # (iii) sampled set-theoretic agreement at this degree
        space_polys = T.trop_space_polys(d)
        agree = True
        for q in grid:
            lhs = _induced_vanishing(space_polys, q)
            rhs = _induced_vanishing(trop_gens, q)
            if lhs != rhs:
                agree = False
                break

        report.degrees.append(
            DegreeBasisReport(d, verdict_i, witness_i, verdict_ii, witness_ii, agree)
        )
    return report


def _containment_with_point_refutation(
    C1: ModuleCongruence,
    C2: ModuleCongruence,
    sound_points,
    options: PipelineOptions,
):
    """Saturation containment check, strengthened by separating-point
    refutation: a point respecting C1 that evaluates a C2 pair unequally
    definitively rules out containment."""
    from .congruences import dual_member

    refuter = TropicalLinearSpace(C1.ambient_size, tuple(sound_points), 0)
    for pair in C2.pairs:
        if sound_points and not dual_member(pair, refuter):
            return False, pair
    verdict, witness = congruence_contains(
        C1,
        C2,
        method="saturation",
        max_chain=options.max_chain,
        max_states=options.max_states,
    )
    return verdict, witness


def kp_set_agreement(
    v: Valuation,
    gens: Sequence[Poly],
    grid: Sequence[Tuple[TropicalValue, ...]],
    max_degree: Optional[int] = None,
    nvars: Optional[int] = None,
    options: Optional[PipelineOptions] = None,
) -> bool:
    """Grid-sampled agreement between the solution set of the graded bend
    congruences and the intersection of the bend loci of all monomial
    multiples of the generators up to the degree bound."""
    gens = [g for g in gens if g]
    if nvars is None:
        if not gens:
            raise ValueError("need nvars for the zero ideal")
        nvars = gens[0].nvars
    if max_degree is None:
        max_degree = default_max_degree(gens)
    T = tropicalize_ideal(v, gens, max_degree, nvars=nvars, options=options)
    multiples: List[TropPoly] = []
    for g in gens:
        tg = tropicalize_poly(v, g)
        for k in range(0, max_degree - g.degree() + 1):
            for m in monomials_of_degree(nvars, k):
                multiples.append(tg.mono_shift(m))
    space_polys = {d: T.trop_space_polys(d) for d in range(0, max_degree + 1)}
    for q in grid:
        lhs = all(_induced_vanishing(space_polys[d], q) for d in space_polys)
        rhs = _induced_vanishing(multiples, q)
        if lhs != rhs:
            return False
    return True
