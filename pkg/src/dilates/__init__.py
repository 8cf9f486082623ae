"""Exact arithmetic, inequality checking, and extremal search for sums of
dilated integer sets."""

from .backend import available_backends, backend_name, use_backend
from .bounds import (
    BoundReport,
    ap_exact_size,
    ap_recompute,
    bound_basic,
    bound_four,
    bound_full_semifull,
    bound_main_large,
    bound_main_small,
    bound_marginal_total,
    check_affine_invariance,
    check_faithful,
    check_suite,
    deficiency,
)
from .components import (
    Decomposition,
    MarginalSplit,
    component_count,
    decompose,
    is_full,
    is_odd_prime,
    is_semi_full,
    marginal_set,
    marginal_split,
    stabilizer,
)
from .errors import (
    ArithmeticRangeError,
    DilatesError,
    HypothesisError,
    InvalidCoefficientError,
    InvalidComponentError,
    InvalidModulusError,
    SearchConfigError,
    VerificationError,
)
from .intset import (
    AffineMap,
    DilateSpec,
    IntSet,
    canonicalize,
    dilate,
    dilate_sum,
    dilate_sum_size,
    minkowski_sum,
)
from .search import (
    ProbeRow,
    SearchConfig,
    SearchResult,
    conjecture_probe,
    enumerate_canonical,
    min_dilate_sum,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "ArithmeticRangeError",
    "BoundReport",
    "Decomposition",
    "DilateSpec",
    "DilatesError",
    "HypothesisError",
    "IntSet",
    "InvalidCoefficientError",
    "InvalidComponentError",
    "InvalidModulusError",
    "MarginalSplit",
    "ProbeRow",
    "SearchConfig",
    "SearchConfigError",
    "SearchResult",
    "VerificationError",
    "ap_exact_size",
    "ap_recompute",
    "available_backends",
    "backend_name",
    "bound_basic",
    "bound_four",
    "bound_full_semifull",
    "bound_main_large",
    "bound_main_small",
    "bound_marginal_total",
    "canonicalize",
    "check_affine_invariance",
    "check_faithful",
    "check_suite",
    "component_count",
    "conjecture_probe",
    "decompose",
    "deficiency",
    "dilate",
    "dilate_sum",
    "dilate_sum_size",
    "enumerate_canonical",
    "is_full",
    "is_odd_prime",
    "is_semi_full",
    "marginal_set",
    "marginal_split",
    "min_dilate_sum",
    "minkowski_sum",
    "stabilizer",
    "use_backend",
]
