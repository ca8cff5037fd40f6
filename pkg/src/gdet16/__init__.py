"""Exact integer group determinants of the order-16 group C2^2 x| C4."""

from .analysis import (
    CheckResult,
    Classification,
    check_even_sector_divisibility,
    check_membership,
    check_odd_sector_congruences,
    check_parity_congruences,
    classify,
    classify_c4,
)
from .evaluators import (
    Assignment,
    FactorBreakdown,
    InconsistencyError,
    TransformedVars,
    big_f,
    d4,
    d4x2,
    eval_factored,
    eval_oracle,
    f4,
    frobenius_eval,
    transform,
)
from .exactlinalg import GaussianInt, det2_gaussian, det_exact
from .groups import GroupElement, cayley_matrix, element_from_index, inverse, multiply
from .search import SearchConfig, SearchReport, run_search
from .witnesses import family_assignment, family_value, witness

__all__ = [
    "Assignment",
    "CheckResult",
    "Classification",
    "FactorBreakdown",
    "GaussianInt",
    "GroupElement",
    "InconsistencyError",
    "SearchConfig",
    "SearchReport",
    "TransformedVars",
    "big_f",
    "cayley_matrix",
    "check_even_sector_divisibility",
    "check_membership",
    "check_odd_sector_congruences",
    "check_parity_congruences",
    "classify",
    "classify_c4",
    "d4",
    "d4x2",
    "det2_gaussian",
    "det_exact",
    "element_from_index",
    "eval_factored",
    "eval_oracle",
    "f4",
    "family_assignment",
    "family_value",
    "frobenius_eval",
    "inverse",
    "multiply",
    "run_search",
    "transform",
    "witness",
]

__version__ = "0.1.0"
