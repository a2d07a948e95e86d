"""Fixed-point enumeration by clamping a positive feedback vertex set.

Every assignment ``a`` of the PFVS ``P`` yields the clamped network ``fa``,
which has no positive cycle. Such a network has at most one fixed point and,
when it has one, reaches it from the all-zero state either after ``n``
synchronous steps or after ``|F \\ P| + 1`` sweeps of a schedule compatible
with ``F`` and ``P``. The candidate obtained this way is a fixed point of the
original network iff it is fixed by ``fa`` and every clamped component agrees
with its clamp.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

from .config import Limits, resolve_limits
from .constants import OrderMode, Strategy
from .errors import InvalidFvsError, InvalidPfvsError, InvalidScheduleError, InvalidSetError
from .graph.cycles import find_positive_cycle, is_acyclic
from .graph.digraph import SignedDigraph, derive
from .models import CandidateDocument, ResultDocument
from .network.network import BooleanNetwork, Schedule, State, apply, restrict, sweep
from .pfvs.algorithm import best_random_pfvs, pfvs_algorithm, verify_pfvs_output
from .pfvs.order import check_order, compatible_order, complete_fvs, is_compatible, min_order

logger = logging.getLogger(__name__)


class RejectionReason(str, Enum):
    """Why a candidate is not a fixed point of the original network."""

    NOT_FA_FIXED = "not-fa-fixed"
    BOUNDARY_MISMATCH = "boundary-mismatch"


@dataclass(slots=True)
class CandidateResult:
    assignment: dict[int, int]
    state: State
    accepted: bool
    reason: Optional[RejectionReason]
    passes: int
    settled_after: Optional[int]


@dataclass(slots=True)
class FixedPointReport:
    """Fixed points with per-candidate diagnostics.

    ``candidates`` is ordered like the binary counter over ``P``; accepted
    candidates correspond one-to-one with ``fixed_points``.
    """

    fixed_points: list[State]
    candidates: list[CandidateResult]
    P: tuple[int, ...]
    strategy: Strategy
    F: Optional[tuple[int, ...]] = None
    schedule: Optional[Schedule] = None
    order_used: Optional[tuple[int, ...]] = None
    timings_ms: dict[str, float] = field(default_factory=dict)

    @property
    def candidates_tested(self) -> int:
        return len(self.candidates)

    @property
    def iterations_per_candidate(self) -> int:
        return self.candidates[0].passes if self.candidates else 0

    def to_document(
        self, net: BooleanNetwork, name: str = "network", include_timings: bool = False
    ) -> ResultDocument:
        """Build the JSON result document; timings only on request."""
        names = net.names
        return ResultDocument(
            network=name,
            n=net.n,
            strategy=self.strategy.value,
            P=[names[v] for v in self.P],
            F=[names[v] for v in self.F] if self.F is not None else None,
            schedule=[names[v] for v in self.schedule] if self.schedule is not None else None,
            fixed_points=[str(x) for x in self.fixed_points],
            candidates_tested=self.candidates_tested,
            candidates=[
                CandidateDocument(
                    assignment={names[v]: bit for v, bit in c.assignment.items()},
                    state=str(c.state),
                    accepted=c.accepted,
                    reason=c.reason.value if c.reason is not None else None,
                    passes=c.passes,
                    settled_after=c.settled_after,
                )
                for c in self.candidates
            ],
            timings_ms=dict(self.timings_ms) if include_timings else None,
        )


# ============================================================================
# Candidate evaluation
# ============================================================================


def _assignments(pfvs: Sequence[int]) -> Iterator[dict[int, int]]:
    """Binary counter over ``P``: bit ``i`` of the counter clamps ``pfvs[i]``."""
    for counter in range(1 << len(pfvs)):
        yield {v: (counter >> i) & 1 for i, v in enumerate(pfvs)}


def _judge(
    net: BooleanNetwork, clamped: BooleanNetwork, a: dict[int, int], x: State
) -> tuple[bool, Optional[RejectionReason]]:
    if apply(clamped, x) != x:
        return False, RejectionReason.NOT_FA_FIXED
    comps = net.components
    if any(comps[u].local(x.bits) != bit for u, bit in a.items()):
        return False, RejectionReason.BOUNDARY_MISMATCH
    return True, None


def _run_synchronous(clamped: BooleanNetwork, passes: int) -> tuple[State, Optional[int]]:
    x = State.zeros(clamped.n)
    settled = 0
    for p in range(1, passes + 1):
        nxt = apply(clamped, x)
        if nxt == x:
            break
        settled = p
        x = nxt
    return x, (settled if settled < passes else None)


def _run_scheduled(
    clamped: BooleanNetwork, pi: Schedule, passes: int
) -> tuple[State, Optional[int]]:
    buf = [0] * clamped.n
    settled = 0
    for p in range(1, passes + 1):
        if sweep(clamped, pi.order, buf):
            settled = p
    return State(tuple(buf)), (settled if settled < passes else None)


def _check_vertices(net: BooleanNetwork, label: str, vertices: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(set(int(v) for v in vertices)))
    bad = [v for v in out if not 0 <= v < net.n]
    if bad:
        raise InvalidSetError(
            f"{label} contains indices {bad} outside [0, {net.n})", {label: list(out)}
        )
    return out


def _verify_pfvs(graph: SignedDigraph, pfvs: Iterable[int], limits: Limits) -> None:
    limits.guard("verify_max_n", graph.n)
    cycle = find_positive_cycle(graph, pfvs, limits)
    if cycle is not None:
        raise InvalidPfvsError(pfvs, cycle.vertices)


def _collect(candidates: list[CandidateResult]) -> list[State]:
    return sorted((c.state for c in candidates if c.accepted), key=str)


# ============================================================================
# Algorithms
# ============================================================================


def fixed_points_basic(
    net: BooleanNetwork,
    pfvs: Iterable[int],
    verify: bool = False,
    limits: Limits | None = None,
) -> FixedPointReport:
    """All fixed points from ``n`` synchronous steps per clamping of ``P``.

    Args:
        net: The network
        pfvs: Positive feedback vertex set of ``derive(net)``
        verify: Check the PFVS property first (desk-scale graphs only)
        limits: Resource guards for verification

    Raises:
        InvalidSetError: If ``pfvs`` has out-of-range indices
        InvalidPfvsError: If ``verify`` is set and a positive cycle survives
    """
    limits = resolve_limits(limits)
    P = _check_vertices(net, "P", pfvs)
    if verify:
        _verify_pfvs(derive(net), P, limits)

    start = time.perf_counter()
    candidates: list[CandidateResult] = []
    for a in _assignments(P):
        clamped = restrict(net, a)
        x, settled = _run_synchronous(clamped, net.n)
        accepted, reason = _judge(net, clamped, a, x)
        candidates.append(CandidateResult(a, x, accepted, reason, net.n, settled))
        logger.debug("candidate %s -> %s (%s)", a, x, reason.value if reason else "accepted")

    report = FixedPointReport(_collect(candidates), candidates, P, Strategy.BASIC)
    report.timings_ms["enumerate"] = (time.perf_counter() - start) * 1000.0
    logger.info(
        "basic: %d fixed points from %d candidates", len(report.fixed_points), len(candidates)
    )
    return report


def fixed_points(
    net: BooleanNetwork,
    fvs: Iterable[int],
    pfvs: Iterable[int],
    pi: Schedule | Sequence[int],
    verify: bool = False,
    limits: Limits | None = None,
) -> FixedPointReport:
    """All fixed points from ``|F \\ P| + 1`` sweeps of ``pi`` per clamping of ``P``.

    Raises:
        InvalidSetError: If ``P`` is not inside ``F`` or indices are out of range
        InvalidFvsError: If ``F`` is not a feedback vertex set
        InvalidScheduleError: If ``pi`` is not compatible with ``F`` and ``P``
        InvalidPfvsError: If ``verify`` is set and a positive cycle survives
    """
    limits = resolve_limits(limits)
    F = _check_vertices(net, "F", fvs)
    P = _check_vertices(net, "P", pfvs)
    if not set(P) <= set(F):
        raise InvalidSetError(
            f"P must be a subset of F; {sorted(set(P) - set(F))} are only in P",
            {"P": list(P), "F": list(F)},
        )
    schedule = pi if isinstance(pi, Schedule) else Schedule.of(pi, net.n)
    graph = derive(net)
    if not is_acyclic(graph, F):
        raise InvalidFvsError(F)
    if not is_compatible(graph, F, P, schedule):
        raise InvalidScheduleError(
            f"schedule {list(schedule.order)} is not compatible with F={list(F)}, P={list(P)}",
            {"order": list(schedule.order), "F": list(F), "P": list(P)},
        )
    if verify:
        _verify_pfvs(graph, P, limits)

    passes = len(F) - len(P) + 1
    start = time.perf_counter()
    candidates: list[CandidateResult] = []
    for a in _assignments(P):
        clamped = restrict(net, a)
        x, settled = _run_scheduled(clamped, schedule, passes)
        accepted, reason = _judge(net, clamped, a, x)
        candidates.append(CandidateResult(a, x, accepted, reason, passes, settled))
        logger.debug("candidate %s -> %s (%s)", a, x, reason.value if reason else "accepted")

    report = FixedPointReport(
        _collect(candidates), candidates, P, Strategy.SCHEDULED, F=F, schedule=schedule
    )
    report.timings_ms["enumerate"] = (time.perf_counter() - start) * 1000.0
    logger.info(
        "scheduled: %d fixed points from %d candidates (%d passes each)",
        len(report.fixed_points),
        len(candidates),
        passes,
    )
    return report


# ============================================================================
# Pipeline
# ============================================================================


def _construction_order(
    graph: SignedDigraph,
    mode: OrderMode,
    order: Optional[Sequence[int]],
) -> list[int]:
    if order is not None:
        return check_order(graph, order)
    if mode is OrderMode.FILE:
        raise InvalidScheduleError("order mode 'file' needs an explicit vertex order")
    return min_order(graph)


def solve(
    net: BooleanNetwork,
    strategy: Strategy = Strategy.AUTO,
    pfvs: Optional[Iterable[int]] = None,
    fvs: Optional[Iterable[int]] = None,
    order_mode: OrderMode = OrderMode.MIN,
    order: Optional[Sequence[int]] = None,
    seed: Optional[int] = None,
    verify: bool = False,
    limits: Limits | None = None,
) -> FixedPointReport:
    """End-to-end driver: derive the graph, pick ``P`` and ``F``, enumerate.

    ``auto`` runs the scheduled algorithm; its construction order is the
    degree heuristic unless ``order_mode`` or ``order`` asks otherwise. When
    ``pfvs`` is supplied without ``fvs``, ``F`` is grown around it.

    Args:
        net: The network
        strategy: basic, scheduled or auto
        pfvs: Explicit PFVS (skips the construction)
        fvs: Explicit FVS for the scheduled algorithm
        order_mode: Order fed to the construction (min, rand or file)
        order: Explicit vertex order (required for ``file``)
        seed: Seed for ``rand``
        verify: Check the PFVS (and the constructed FVS) before enumerating
        limits: Resource guards
    """
    limits = resolve_limits(limits)
    strategy = Strategy(strategy)
    order_mode = OrderMode(order_mode)

    timings: dict[str, float] = {}
    start = time.perf_counter()
    graph = derive(net)
    timings["derive"] = (time.perf_counter() - start) * 1000.0

    start = time.perf_counter()
    order_used: Optional[tuple[int, ...]] = None
    if pfvs is None:
        if order_mode is OrderMode.RAND and order is None:
            out = best_random_pfvs(graph, random.Random(seed))
        else:
            out = pfvs_algorithm(graph, _construction_order(graph, order_mode, order))
        if verify:
            verify_pfvs_output(graph, out, limits)
        P = tuple(sorted(out.P))
        F = tuple(sorted(fvs)) if fvs is not None else tuple(sorted(out.F))
        order_used = out.order_used
    else:
        P = _check_vertices(net, "P", pfvs)
        if fvs is not None:
            F = _check_vertices(net, "F", fvs)
        elif strategy is Strategy.BASIC:
            F = None
        else:
            order_used = tuple(_construction_order(graph, order_mode, order))
            F = tuple(sorted(complete_fvs(graph, P, order_used)))
    timings["select"] = (time.perf_counter() - start) * 1000.0

    if strategy is Strategy.BASIC:
        report = fixed_points_basic(net, P, verify=verify and pfvs is not None, limits=limits)
        report.F = F
    else:
        assert F is not None
        pi = compatible_order(graph, F, P)
        report = fixed_points(net, F, P, pi, verify=verify and pfvs is not None, limits=limits)
    report.strategy = strategy
    report.order_used = order_used
    report.timings_ms = {**timings, **report.timings_ms}
    report.timings_ms["total"] = sum(report.timings_ms.values())
    return report
