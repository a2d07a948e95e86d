"""PFVS / FVS construction and schedule orders."""

from .algorithm import (
    ForceState,
    PfvsOutput,
    best_random_pfvs,
    force_step,
    pfvs_algorithm,
    verify_pfvs_output,
)
from .order import (
    check_order,
    compatible_order,
    complete_fvs,
    is_compatible,
    min_order,
    random_compatible_order,
    random_order,
)

__all__ = [
    "PfvsOutput",
    "ForceState",
    "force_step",
    "pfvs_algorithm",
    "best_random_pfvs",
    "verify_pfvs_output",
    "min_order",
    "random_order",
    "check_order",
    "compatible_order",
    "random_compatible_order",
    "is_compatible",
    "complete_fvs",
]
