"""Erasure coding with Vandermonde parity matrices over finite fields:
systematic MDS codes, low-field-size super-regular constructions,
merge-regime code conversion with access accounting, feasibility bounds,
and exhaustive/randomized scalar search."""

__version__ = "0.1.0"

from .bounds import (
    FeasibilityVerdict,
    Violation,
    check_char2_bound,
    check_divisor_bound,
    existence_threshold,
    zero_sum_singular_selector,
    zero_sum_subset,
)
from .codes import SystematicCode, systematic_code
from .constructions import (
    GUARANTEE_CHAR2,
    GUARANTEE_GENERAL,
    GUARANTEE_UNVERIFIED,
    BuiltParity,
    ConstructionRecipe,
    build_parity,
    scalars_automorphism,
    scalars_consecutive_powers,
    scalars_coprime_exponent,
    trinomial_singularity_scan,
)
from .convert import (
    AccessStats,
    ConvertiblePair,
    convert_merge,
    default_convert,
    make_pair,
    verify_conversion_correctness,
)
from .galois import FieldCtx, FieldSpec, field_spec, find_primitive, make_field
from .matrix import (
    MatrixF,
    SubmatrixSelector,
    SuperRegularityReport,
    determinant,
    is_super_regular,
    scan_vandermonde,
    shift_selector,
    vandermonde,
)
from .search import (
    FrontierRow,
    SearchReport,
    empirical_min_q,
    exhaustive_search,
    prime_power_family,
    random_search,
)

__all__ = [
    "__version__",
    "AccessStats",
    "BuiltParity",
    "ConstructionRecipe",
    "ConvertiblePair",
    "FeasibilityVerdict",
    "FieldCtx",
    "FieldSpec",
    "FrontierRow",
    "GUARANTEE_CHAR2",
    "GUARANTEE_GENERAL",
    "GUARANTEE_UNVERIFIED",
    "MatrixF",
    "SearchReport",
    "SubmatrixSelector",
    "SuperRegularityReport",
    "SystematicCode",
    "Violation",
    "build_parity",
    "check_char2_bound",
    "check_divisor_bound",
    "convert_merge",
    "default_convert",
    "determinant",
    "empirical_min_q",
    "exhaustive_search",
    "existence_threshold",
    "field_spec",
    "find_primitive",
    "is_super_regular",
    "make_field",
    "make_pair",
    "prime_power_family",
    "random_search",
    "scalars_automorphism",
    "scalars_consecutive_powers",
    "scalars_coprime_exponent",
    "scan_vandermonde",
    "shift_selector",
    "systematic_code",
    "trinomial_singularity_scan",
    "vandermonde",
    "verify_conversion_correctness",
    "zero_sum_singular_selector",
    "zero_sum_subset",
]
