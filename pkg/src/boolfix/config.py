"""Resource guard configuration.

Every exponential sweep in the package (semantic supports, cycle
enumeration, state-space oracles, subset searches) is bounded by one of the
limits below. Limits come from the environment so that batch jobs can raise
them without touching the command line.
"""

from __future__ import annotations

import logging

from pydantic import BaseModel, ConfigDict, Field

from .constants import (
    BRUTE_TAU_MAX_N_DEFAULT,
    CYCLE_CAP_DEFAULT,
    DYNAMICS_MAX_N_DEFAULT,
    ENV_BRUTE_TAU_MAX_N,
    ENV_CYCLE_CAP,
    ENV_DYNAMICS_MAX_N,
    ENV_MAX_IN_DEGREE,
    ENV_ORACLE_MAX_N,
    ENV_VERIFY_MAX_N,
    MAX_IN_DEGREE_DEFAULT,
    ORACLE_MAX_N_DEFAULT,
    VERIFY_MAX_N_DEFAULT,
)
from .errors import ResourceLimitError
from .utils.env import get_env_int

logger = logging.getLogger(__name__)


class Limits(BaseModel):
    """Upper bounds for the exhaustive parts of the engine."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    max_in_degree: int = Field(default=MAX_IN_DEGREE_DEFAULT, ge=1)
    cycle_cap: int = Field(default=CYCLE_CAP_DEFAULT, ge=1)
    oracle_max_n: int = Field(default=ORACLE_MAX_N_DEFAULT, ge=1)
    brute_tau_max_n: int = Field(default=BRUTE_TAU_MAX_N_DEFAULT, ge=1)
    verify_max_n: int = Field(default=VERIFY_MAX_N_DEFAULT, ge=1)
    dynamics_max_n: int = Field(default=DYNAMICS_MAX_N_DEFAULT, ge=1)

    @classmethod
    def from_env(cls) -> "Limits":
        """Build limits from ``BOOLFIX_*`` environment variables."""
        return cls(
            max_in_degree=get_env_int(ENV_MAX_IN_DEGREE, MAX_IN_DEGREE_DEFAULT, minimum=1),
            cycle_cap=get_env_int(ENV_CYCLE_CAP, CYCLE_CAP_DEFAULT, minimum=1),
            oracle_max_n=get_env_int(ENV_ORACLE_MAX_N, ORACLE_MAX_N_DEFAULT, minimum=1),
            brute_tau_max_n=get_env_int(ENV_BRUTE_TAU_MAX_N, BRUTE_TAU_MAX_N_DEFAULT, minimum=1),
            verify_max_n=get_env_int(ENV_VERIFY_MAX_N, VERIFY_MAX_N_DEFAULT, minimum=1),
            dynamics_max_n=get_env_int(ENV_DYNAMICS_MAX_N, DYNAMICS_MAX_N_DEFAULT, minimum=1),
        )

    def guard(self, limit: str, value: int) -> None:
        """Raise ``ResourceLimitError`` when ``value`` exceeds the named limit."""
        cap = getattr(self, limit)
        if value > cap:
            logger.warning("Resource guard %s tripped: %d > %d", limit, value, cap)
            raise ResourceLimitError(limit, value, cap)


def resolve_limits(limits: Limits | None) -> Limits:
    """Return ``limits`` or the environment-derived defaults."""
    return limits if limits is not None else Limits.from_env()
