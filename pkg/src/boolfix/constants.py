"""Application constants: resource guard defaults and environment variable names.

Centralized so the CLI, the solvers and the tests agree on the same limits.
"""

from __future__ import annotations

from enum import Enum

# ============================================================================
# Resource Guards
# ============================================================================

MAX_IN_DEGREE_DEFAULT = 20  # Semantic support enumerates 2^d assignments
CYCLE_CAP_DEFAULT = 1_000_000  # Simple cycles enumerated before giving up
ORACLE_MAX_N_DEFAULT = 25  # Full state-space sweeps
BRUTE_TAU_MAX_N_DEFAULT = 20  # Subset enumeration for tau / tau+
VERIFY_MAX_N_DEFAULT = 24  # Post-hoc PFVS / minimal FVS verification
DYNAMICS_MAX_N_DEFAULT = 16  # Exhaustive trajectory checks (every start state)
PERMUTATION_SEARCH_MAX_N = 6  # Exhaustive schedule search in the oracle

# ============================================================================
# Environment Variables
# ============================================================================

ENV_LOG_LEVEL = "BOOLFIX_LOG_LEVEL"
ENV_VERBOSE_LOGGING = "BOOLFIX_VERBOSE_LOGGING"
ENV_MAX_IN_DEGREE = "BOOLFIX_MAX_IN_DEGREE"
ENV_CYCLE_CAP = "BOOLFIX_CYCLE_CAP"
ENV_ORACLE_MAX_N = "BOOLFIX_ORACLE_MAX_N"
ENV_BRUTE_TAU_MAX_N = "BOOLFIX_BRUTE_TAU_MAX_N"
ENV_VERIFY_MAX_N = "BOOLFIX_VERIFY_MAX_N"
ENV_DYNAMICS_MAX_N = "BOOLFIX_DYNAMICS_MAX_N"


class Strategy(str, Enum):
    """Fixed-point enumeration strategy."""

    BASIC = "basic"
    SCHEDULED = "scheduled"
    AUTO = "auto"


class OrderMode(str, Enum):
    """Vertex order fed to the PFVS construction."""

    MIN = "min"
    RAND = "rand"
    FILE = "file"


# ============================================================================
# Benchmark Output
# ============================================================================

BENCH_CSV_HEADER = ("n", "tau", "tau_plus", "strategy", "rep", "ms")
