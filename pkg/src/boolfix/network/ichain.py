"""Constant-propagation chain of a network.

Level 1 holds the components whose local function is constant. Level k+1
adds every component whose function becomes constant once the inputs fixed
at level k are replaced by their values. The chain stops at the first level
that adds nothing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..config import Limits, resolve_limits
from .expr import Const
from .network import BooleanNetwork, Schedule

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ChainLevel:
    """Cumulative set ``I_k`` and the value forced on each of its members."""

    members: frozenset[int]
    constants: dict[int, int] = field(hash=False)


@dataclass(frozen=True, slots=True)
class IChain:
    levels: tuple[ChainLevel, ...]

    @property
    def k_star(self) -> int:
        """Least k with ``I_k = I_{k+1}``; 0 when nothing is ever fixed."""
        return len(self.levels)

    @property
    def fixed(self) -> frozenset[int]:
        return self.levels[-1].members if self.levels else frozenset()

    @property
    def constants(self) -> dict[int, int]:
        return dict(self.levels[-1].constants) if self.levels else {}

    def level_of(self, v: int) -> int | None:
        """1-based level at which ``v`` first appears, or None."""
        for k, level in enumerate(self.levels, start=1):
            if v in level.members:
                return k
        return None

    def covers(self, n: int) -> bool:
        return len(self.fixed) == n


def _forced_value(table: np.ndarray, support: tuple[int, ...], fixed: dict[int, int]) -> int | None:
    """Return the constant value of a table once ``fixed`` inputs are set, else None."""
    rows = np.arange(table.size, dtype=np.int64)
    mask = np.ones(table.size, dtype=bool)
    for j, u in enumerate(support):
        if u in fixed:
            mask &= ((rows >> j) & 1) == fixed[u]
    values = table[mask]
    if values.min() == values.max():
        return int(values[0])
    return None


def compute_i_chain(net: BooleanNetwork, limits: Limits | None = None) -> IChain:
    """Compute the fixing chain ``I_1 ⊊ I_2 ⊊ ... ⊊ I_k*``.

    Constancy is decided by exhausting the free support of each component;
    the values found at one level are substituted into the checks of the next.

    Raises:
        ResourceLimitError: If a free support exceeds ``limits.max_in_degree``
    """
    limits = resolve_limits(limits)
    fixed: dict[int, int] = {}
    levels: list[ChainLevel] = []

    while True:
        found: dict[int, int] = {}
        for v, comp in enumerate(net.components):
            if v in fixed:
                continue
            free = sum(1 for u in comp.support if u not in fixed)
            limits.guard("max_in_degree", free)
            value = _forced_value(comp.table, comp.support, fixed)
            if value is not None:
                found[v] = value
        if not found:
            break
        fixed.update(found)
        levels.append(ChainLevel(frozenset(fixed), dict(fixed)))
        logger.debug("Chain level %d fixes %s", len(levels), sorted(found))

    logger.info("I-chain stationary at k*=%d with %d/%d fixed", len(levels), len(fixed), net.n)
    return IChain(tuple(levels))


def reduce_by_chain(net: BooleanNetwork, chain: IChain, k: int) -> BooleanNetwork:
    """Return ``f^{I_k}``: variables in ``I_k`` replaced by their constants.

    Components in ``I_k`` become their constants; the others are folded.
    """
    if k < 0 or k > len(chain.levels):
        raise ValueError(f"level {k} outside [0, {len(chain.levels)}]")
    if k == 0:
        return net
    constants = chain.levels[k - 1].constants
    if not constants:
        return net
    replacements = {
        v: Const(constants[v]) if v in constants else comp.expr.substitute(constants)
        for v, comp in enumerate(net.components)
    }
    return net.with_components(replacements)


def level_order(chain: IChain, n: int) -> Schedule:
    """Schedule listing components by the level that fixes them.

    Ties and unfixed components follow ascending index; when the chain covers
    every component, one sweep in this order reaches the fixed point from any
    state.
    """
    big = len(chain.levels) + 1
    levels = {v: chain.level_of(v) or big for v in range(n)}
    return Schedule(tuple(sorted(range(n), key=lambda v: (levels[v], v))))
