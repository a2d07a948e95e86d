"""Brute-force references.

Everything here sweeps the whole state space and evaluates local functions
structurally, straight from the expression trees, so that results never
depend on the compiled truth tables or on the solver they are used to check.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Optional, Sequence

import numpy as np

from .config import Limits, resolve_limits
from .constants import PERMUTATION_SEARCH_MAX_N
from .errors import InvalidFvsError, InvalidScheduleError, PreconditionError
from .graph.cycles import brute_tau, find_positive_cycle, is_acyclic
from .graph.digraph import SignedDigraph, derive
from .network.ichain import IChain, compute_i_chain, level_order
from .network.network import BooleanNetwork, Schedule, State
from .pfvs.order import compatible_order, is_compatible

logger = logging.getLogger(__name__)

CHUNK_BITS = 16


# ============================================================================
# Vectorised structural evaluation
# ============================================================================


def _states(start: int, stop: int, n: int) -> np.ndarray:
    """Rows ``start..stop-1`` of the state space; bit ``i`` of the row is component ``i``."""
    rows = np.arange(start, stop, dtype=np.int64)
    return ((rows[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(bool)


def _image(net: BooleanNetwork, states: np.ndarray) -> np.ndarray:
    size = states.shape[0]
    columns = {i: states[:, i] for i in range(net.n)}
    out = np.empty_like(states)
    for v, comp in enumerate(net.components):
        out[:, v] = comp.expr.evaluate_columns(columns, size)
    return out


def _sweep(net: BooleanNetwork, order: Sequence[int], states: np.ndarray) -> np.ndarray:
    """One sequential pass over every row; returns a new array."""
    out = states.copy()
    size = out.shape[0]
    columns = {i: out[:, i] for i in range(net.n)}
    for v in order:
        out[:, v] = net.components[v].expr.evaluate_columns(columns, size)
    return out


def _as_state(row: np.ndarray) -> State:
    return State(tuple(int(b) for b in row))


def _row_of(y: State) -> np.ndarray:
    return np.array(y.bits, dtype=bool)


def brute_fixed_points(net: BooleanNetwork, limits: Limits | None = None) -> list[State]:
    """Every ``x`` with ``f(x) = x``, sorted as bit strings.

    Raises:
        ResourceLimitError: If ``n`` exceeds ``limits.oracle_max_n``
    """
    limits = resolve_limits(limits)
    limits.guard("oracle_max_n", net.n)
    total = 1 << net.n
    chunk = 1 << CHUNK_BITS
    found: list[State] = []
    for start in range(0, total, chunk):
        states = _states(start, min(start + chunk, total), net.n)
        fixed = np.all(_image(net, states) == states, axis=1)
        found.extend(_as_state(row) for row in states[fixed])
    found.sort(key=str)
    logger.info("Brute force: %d fixed points among %d states", len(found), total)
    return found


# ============================================================================
# Property checks
# ============================================================================


def _require_no_positive_cycle(net: BooleanNetwork, limits: Limits) -> SignedDigraph:
    graph = derive(net)
    cycle = find_positive_cycle(graph, (), limits)
    if cycle is not None:
        raise PreconditionError(
            f"network has a positive cycle {list(cycle.vertices)}",
            {"cycle": list(cycle.vertices)},
        )
    return graph


def _all_states(net: BooleanNetwork, limits: Limits) -> np.ndarray:
    limits.guard("dynamics_max_n", net.n)
    return _states(0, 1 << net.n, net.n)


def _first_miss(result: np.ndarray, states: np.ndarray, y: Optional[State]) -> Optional[State]:
    """Start state whose image differs from ``y`` (any start when ``y`` is None)."""
    if y is None:
        return _as_state(states[0]) if states.shape[0] else None
    miss = np.any(result != _row_of(y), axis=1)
    if not np.any(miss):
        return None
    return _as_state(states[int(np.argmax(miss))])


@dataclass(slots=True)
class ThomasVerdict:
    fixed_points: list[State]

    @property
    def holds(self) -> bool:
        return len(self.fixed_points) <= 1


def check_thomas(net: BooleanNetwork, limits: Limits | None = None) -> ThomasVerdict:
    """A network without positive cycles has at most one fixed point.

    Raises:
        PreconditionError: If the interaction graph has a positive cycle
    """
    limits = resolve_limits(limits)
    _require_no_positive_cycle(net, limits)
    return ThomasVerdict(brute_fixed_points(net, limits))


@dataclass(slots=True)
class ConvergenceVerdict:
    """Convergence of ``|F| + 1`` sweeps of compatible schedules to the fixed point."""

    fixed_point: State
    fvs: frozenset[int]
    schedules: list[Schedule]
    failures: list[tuple[Schedule, State]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


def check_compatible_convergence(
    net: BooleanNetwork,
    fvs: Iterable[int],
    schedules: Iterable[Schedule | Sequence[int]],
    limits: Limits | None = None,
) -> ConvergenceVerdict:
    """Check that ``(f^pi)^<|F|+1>(x) = y`` for every start ``x`` and every ``pi``.

    Each ``pi`` must be compatible with ``F`` and ``P = ∅``.

    Raises:
        PreconditionError: If a positive cycle exists or there is no fixed point
        InvalidFvsError: If ``F`` is not a feedback vertex set
        InvalidScheduleError: If a schedule is not compatible with ``F``
    """
    limits = resolve_limits(limits)
    graph = _require_no_positive_cycle(net, limits)
    F = frozenset(fvs)
    if not is_acyclic(graph, F):
        raise InvalidFvsError(F)
    fps = brute_fixed_points(net, limits)
    if len(fps) != 1:
        raise PreconditionError("network has no fixed point", {"fixed_points": len(fps)})
    y = fps[0]

    states = _all_states(net, limits)
    verdict = ConvergenceVerdict(y, F, [])
    for pi in schedules:
        pi = pi if isinstance(pi, Schedule) else Schedule.of(pi, net.n)
        if not is_compatible(graph, F, (), pi):
            raise InvalidScheduleError(
                f"schedule {list(pi.order)} is not compatible with F={sorted(F)}",
                {"order": list(pi.order), "F": sorted(F)},
            )
        verdict.schedules.append(pi)
        result = states
        for _ in range(len(F) + 1):
            result = _sweep(net, pi.order, result)
        witness = _first_miss(result, states, y)
        if witness is not None:
            verdict.failures.append((pi, witness))
            logger.warning("Sequential convergence fails for %s from %s", pi.order, witness)
    return verdict


@dataclass(slots=True)
class EquivalenceVerdict:
    """Three-way equivalence for networks without positive cycles.

    * ``unique``: exactly one fixed point ``y``;
    * ``synchronous``: ``f^<n>(x) = y`` for every ``x``;
    * ``one_pass``: some schedule reaches ``y`` in one sweep from every ``x``.
    """

    fixed_point: Optional[State]
    unique: bool
    synchronous: bool
    one_pass_schedule: Optional[Schedule]
    schedule_results: dict[tuple[int, ...], bool] = field(default_factory=dict)
    compatible: Optional[ConvergenceVerdict] = None
    zero_start_stationary: bool = False
    violations: list[str] = field(default_factory=list)

    @property
    def one_pass(self) -> bool:
        return self.one_pass_schedule is not None

    @property
    def holds(self) -> bool:
        return not self.violations


def _one_pass(net: BooleanNetwork, order: Sequence[int], states: np.ndarray, y: State) -> bool:
    return _first_miss(_sweep(net, order, states), states, y) is None


def check_theorem2(
    net: BooleanNetwork,
    schedules: Iterable[Schedule | Sequence[int]] = (),
    limits: Limits | None = None,
) -> EquivalenceVerdict:
    """Verify the equivalence of unique fixed point, synchronous convergence in
    ``n`` steps, and one-sweep convergence under some schedule.

    The one-sweep witness is searched among the supplied ``schedules``, the
    fixing-chain order, and (for very small networks) every permutation. When
    a fixed point exists the sequential form is also checked with ``F`` a
    minimum FVS and a compatible schedule.

    Raises:
        PreconditionError: If the interaction graph has a positive cycle
    """
    limits = resolve_limits(limits)
    graph = _require_no_positive_cycle(net, limits)
    n = net.n
    fps = brute_fixed_points(net, limits)
    y = fps[0] if len(fps) == 1 else None
    states = _all_states(net, limits)

    result = states
    for _ in range(n):
        result = _image(net, result)
    synchronous = y is not None and _first_miss(result, states, y) is None

    zero = _states(0, 1, n)
    reached = zero
    for _ in range(n):
        reached = _image(net, reached)
    zero_start_stationary = bool(np.all(_image(net, reached) == reached))

    verdict = EquivalenceVerdict(
        y, y is not None, synchronous, None, zero_start_stationary=zero_start_stationary
    )

    for pi in schedules:
        order = (pi if isinstance(pi, Schedule) else Schedule.of(pi, n)).order
        ok = y is not None and _one_pass(net, order, states, y)
        verdict.schedule_results[order] = ok
        if ok and verdict.one_pass_schedule is None:
            verdict.one_pass_schedule = Schedule(order)

    if y is not None and verdict.one_pass_schedule is None:
        chain = compute_i_chain(net, limits)
        order = level_order(chain, n).order
        if _one_pass(net, order, states, y):
            verdict.one_pass_schedule = Schedule(order)
        elif n <= PERMUTATION_SEARCH_MAX_N:
            for order in permutations(range(n)):
                if _one_pass(net, order, states, y):
                    verdict.one_pass_schedule = Schedule(tuple(order))
                    break

    if y is not None:
        _, witness = brute_tau(graph, limits)
        verdict.compatible = check_compatible_convergence(
            net, witness, [compatible_order(graph, witness, ())], limits
        )
        if not verdict.compatible.holds:
            pi, x = verdict.compatible.failures[0]
            verdict.violations.append(
                f"compatible schedule {list(pi.order)} misses the fixed point from {x}"
            )

    if not (verdict.unique == verdict.synchronous == verdict.one_pass):
        witness = _first_miss(result, states, y)
        verdict.violations.append(
            f"unique={verdict.unique} synchronous={verdict.synchronous} "
            f"one_pass={verdict.one_pass} (start state {witness})"
        )
    if verdict.unique and not zero_start_stationary:
        verdict.violations.append("f^<n>(0) is not stationary although a fixed point exists")
    if not verdict.unique and zero_start_stationary:
        verdict.violations.append("f^<n>(0) is stationary although no fixed point exists")
    if len(fps) > 1:
        verdict.violations.append(f"{len(fps)} fixed points without a positive cycle")

    logger.info("Equivalence check: %s", "holds" if verdict.holds else verdict.violations)
    return verdict


@dataclass(slots=True)
class ChainVerdict:
    """Unique fixed point iff the fixing chain grows until it covers every component."""

    chain: IChain
    unique: bool
    covers: bool

    @property
    def holds(self) -> bool:
        return self.unique == self.covers


def check_lemma1(net: BooleanNetwork, limits: Limits | None = None) -> ChainVerdict:
    """Compare the fixed-point count with the fixing chain.

    Raises:
        PreconditionError: If a positive cycle exists or an input acts with both signs
    """
    limits = resolve_limits(limits)
    _require_no_positive_cycle(net, limits)
    if not net.is_regulatory():
        raise PreconditionError("network has an input acting with both signs")
    chain = compute_i_chain(net, limits)
    unique = len(brute_fixed_points(net, limits)) == 1
    return ChainVerdict(chain, unique, chain.covers(net.n))
