"""Sensitivity laboratory for weighted sum Boolean functions."""

__version__ = "0.1.0"

from .core import (
    BitVector,
    BooleanFunction,
    average_sensitivity,
    flip,
    max_sensitivity_naive,
    min_sensitivity_naive,
    naive_full_scan,
    sensitive_coordinates,
    sensitivity,
)
from .engine import (
    ScanRecord,
    SearchConfig,
    SensitivityReport,
    conjecture_scan,
    gray_scan,
    iter_conjecture_scan,
    min_sensitivity_with_early_exit,
    parallel_scan,
)
from .errors import ContractViolationError, ExhaustiveLimitError
from .wsf import (
    MinSPrediction,
    OriginalWSF,
    SimplifiedWSF,
    all_ones_sensitivity_closed_form,
    classify_min_sensitivity,
    fast_sensitivity,
    incremental_weight_update,
    original_eval,
    simplified_eval,
    smallest_prime_geq,
    theorem42_witness,
    weight_sum,
)

__all__ = [
    "BitVector",
    "BooleanFunction",
    "ContractViolationError",
    "ExhaustiveLimitError",
    "MinSPrediction",
    "OriginalWSF",
    "ScanRecord",
    "SearchConfig",
    "SensitivityReport",
    "SimplifiedWSF",
    "all_ones_sensitivity_closed_form",
    "average_sensitivity",
    "classify_min_sensitivity",
    "conjecture_scan",
    "fast_sensitivity",
    "flip",
    "gray_scan",
    "incremental_weight_update",
    "iter_conjecture_scan",
    "max_sensitivity_naive",
    "min_sensitivity_naive",
    "min_sensitivity_with_early_exit",
    "naive_full_scan",
    "original_eval",
    "parallel_scan",
    "sensitive_coordinates",
    "sensitivity",
    "simplified_eval",
    "smallest_prime_geq",
    "theorem42_witness",
    "weight_sum",
]
