"""wittkit: exact generalized Witt vector arithmetic, one-dimensional formal
group laws over Z[x], logarithm coefficients of complete-intersection
Calabi-Yau pencils, per-prime ordinariness diagnostics, and Picard-Fuchs
congruence certification.  Everything is exact; there is no floating point
anywhere in the package.
"""

from .families import (
    FAMILY_IDS,
    CompleteIntersectionFamily,
    FamilyCatalogEntry,
    UnknownFamilyError,
    am_coefficient,
    am_logarithm,
    builtin_family,
    closed_form_logarithm,
    family_logarithm,
    resolve_family_id,
)
from .formal_groups import (
    AmbientMismatchError,
    Curve,
    FormalGroupLaw,
    IntegralityReport,
    Logarithm,
    additive_logarithm,
    canonical_curve,
    curve_frobenius,
    curve_scale,
    curve_verschiebung,
    fg_add,
    fg_neg,
    frobenius_matrix_1d,
    group_law_from_logarithm,
    integrality_report,
    multiplicative_logarithm,
    witt_cartier_bridge,
)
from .ordinarity import (
    BudgetExceededError,
    CongruenceCheck,
    FiberClassification,
    OracleUnavailableError,
    OrdinarityReport,
    classify_elliptic_fiber,
    frobenius_power_congruence,
    hasse_witt_poly,
    hasse_witt_value,
    nonordinary_locus,
    ordinarity_scan,
    point_count_projective,
)
from .picard_fuchs import (
    CoefficientCongruence,
    SolutionCheck,
    ThetaOperator,
    apply_operator,
    expand_operator,
    pf_congruence_check,
    quintic_fundamental_period,
    quintic_picard_fuchs,
    series_solution_check,
)
from .polynomials import (
    ExactRational,
    NonIntegralError,
    SparsePolynomial,
    VariableMismatchError,
    coefficient_of,
    poly_reduce_mod,
)
from .series import (
    MultiTruncatedSeries,
    TruncatedSeries,
    TruncationError,
    compose_multivariate,
    series_compose,
    series_inverse,
    series_reversion,
    substitute_univariate,
)
from .witt import (
    GhostInvariantViolation,
    GhostVector,
    IntegralityError,
    WittVector,
    from_ghost,
    teichmueller,
    to_ghost,
    witt_add,
    witt_frobenius,
    witt_mul,
    witt_neg,
    witt_scale_int,
    witt_truncate,
    witt_verschiebung,
)

__version__ = "0.1.0"
