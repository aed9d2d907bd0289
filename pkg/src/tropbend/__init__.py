"""tropbend: exact scheme-theoretic tropicalization.

Max-plus semifield arithmetic over exact rationals, valued ground fields,
bend congruences of tropical polynomials, tropical linear spaces with their
circuit presentations, degree-graded tropicalization of homogeneous ideals,
tropical Hilbert functions, plane-curve facet multiplicities, and
scheme-theoretic tropical-basis checking.
"""

from .bend import (
    BendRelationSet,
    UnivariateCanonicalForm,
    bend_relations,
    recover_from_bend,
    tropically_vanishes,
    univariate_canonical_form,
)
from .congruences import (
    ModuleCongruence,
    base_change,
    congruence_contains,
    congruence_member,
    dual_member,
    one_step_member,
    pushforward,
)
from .curves import PlaneCurve, TropicalCurveFacet, balanced_at_vertices, plane_curve_facets
from .errors import ProblemParseError, RecoveryError, ResourceExhausted
from .fields import (
    QQ,
    QQt,
    PAdicValuation,
    QPoly,
    RationalFunction,
    TAdicValuation,
    TrivialValuation,
    Valuation,
    check_valuation_axioms,
    valuate,
)
from .polynomials import (
    GradedPiece,
    Poly,
    TropPoly,
    classical_hilbert,
    ideal_graded_piece,
    monomials_of_degree,
    tropicalize_poly,
)
from .semiring import (
    NEG_INF,
    T_ONE,
    BooleanValue,
    TropicalValue,
    parse_tropical,
    to_boolean,
    trop,
    trop_add,
    trop_leq,
    trop_mul,
    trop_sum,
)
from .tropical_linear import (
    TropicalLinearSpace,
    mz_dimension,
    orthogonal_dual,
    span_membership,
    tropicalize_subspace,
)
from .tropicalize import (
    GradedTropicalIdeal,
    PipelineOptions,
    kp_set_agreement,
    principal_bend_congruence,
    recover_hypersurface,
    tropical_basis_check,
    tropical_hilbert,
    tropicalize_ideal,
    tropicalize_point,
)

__version__ = "0.1.0"
