"""Exact Pfaffian calculator for Q-functions indexed by integer compositions.

The free polynomial ring on the generators q1, q2, ... carries the raw
Pfaffian identities exactly; the quotient by the alternating relations is
applied through explicit normalization, and a specialization oracle
confirms quotient-level statements independently.
"""

from .compositions import (
    Composition,
    append_zero,
    format_composition,
    ind,
    is_partition,
    is_strict,
    is_strict_partition,
    length,
    parse_composition,
    prepend,
    remove_at,
    remove_at2,
    staircase,
    weight,
)
from .gamma import (
    GammaPoly,
    Rat,
    gamma_equal,
    gamma_normal_form,
    gen,
    is_gamma_zero,
    macdonald_sum,
)
from .oracle import (
    SpecializationContext,
    evaluate,
    identity_holds_in_gamma,
    series_coefficients,
)
from .pfaffian import SkewMatrix, determinant, pfaffian, pfaffian_along
from .qcore import (
    alternating_removed_sum,
    matrix_M,
    matrix_N,
    neg_head_value,
    q2,
    schur_q,
    skew_schur_q,
    skew_schur_q_mu_padded,
    swap_adjacent_value,
)
from .report import IdentityReport
from .suites import CATALOG, SuiteParams, run_suite

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "Composition",
    "GammaPoly",
    "IdentityReport",
    "Rat",
    "SkewMatrix",
    "SpecializationContext",
    "SuiteParams",
    "alternating_removed_sum",
    "append_zero",
    "determinant",
    "evaluate",
    "format_composition",
    "gamma_equal",
    "gamma_normal_form",
    "gen",
    "identity_holds_in_gamma",
    "ind",
    "is_gamma_zero",
    "is_partition",
    "is_strict",
    "is_strict_partition",
    "length",
    "macdonald_sum",
    "matrix_M",
    "matrix_N",
    "neg_head_value",
    "parse_composition",
    "pfaffian",
    "pfaffian_along",
    "prepend",
    "q2",
    "remove_at",
    "remove_at2",
    "run_suite",
    "schur_q",
    "series_coefficients",
    "skew_schur_q",
    "skew_schur_q_mu_padded",
    "staircase",
    "swap_adjacent_value",
    "weight",
]
