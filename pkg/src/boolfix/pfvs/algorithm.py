"""Construction of a positive feedback vertex set ``P`` together with a
minimal feedback vertex set ``F = P ∪ O``.

Vertices are pulled, one at a time and in the given order, into the set ``R``
of processed vertices. Each time a vertex enters ``R`` the force step looks
for circuits closing through an unprocessed vertex ``a``, using the signed
path relations recorded between ``R`` and the unprocessed vertices:

* a positive circuit sends ``a`` to ``P`` for good;
* a negative one parks ``a`` in ``Y`` until the next phase.

A phase ends when no unclassified vertex is left. The next phase puts every
vertex that is neither in ``P`` nor in ``R`` back into play, and from then on
each vertex pulled into ``R`` also goes to ``O``.
"""

from __future__ import annotations

import logging
import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from ..config import Limits, resolve_limits
from ..errors import InvalidFvsError, InvalidPfvsError
from ..graph.cycles import find_positive_cycle, is_acyclic, is_minimal_fvs
from ..graph.digraph import SignedDigraph
from .order import check_order, random_order

logger = logging.getLogger(__name__)

SignedVertex = tuple[int, int]


@dataclass(frozen=True, slots=True)
class PfvsOutput:
    """Result of one run of the construction."""

    P: frozenset[int]
    O: frozenset[int]  # noqa: E741
    R: frozenset[int]
    phases: int
    order_used: tuple[int, ...]

    @property
    def F(self) -> frozenset[int]:
        return self.P | self.O


@dataclass(slots=True)
class ForceState:
    """Signed path relations between processed and unprocessed vertices.

    ``anc[a]`` holds ``(b, s)`` when a path of sign ``s`` runs from the
    processed vertex ``b`` to ``a``; ``dec[b]`` holds the mirror entry
    ``(a, s)``. Both persist for the whole run; both signs may be kept.
    """

    anc: dict[int, set[SignedVertex]] = field(default_factory=lambda: defaultdict(set))
    dec: dict[int, set[SignedVertex]] = field(default_factory=lambda: defaultdict(set))


def force_step(
    graph: SignedDigraph,
    state: ForceState,
    u: int,
    U: set[int],
    Y: set[int],
    R: set[int],
    P: set[int],
) -> None:
    """Classify the vertices reachable from ``u``, which has just entered ``R``.

    ``graph`` must already be stripped of negative loops. ``U``, ``Y`` and
    ``P`` are updated in place; ``state`` gains the new path relations.
    """
    before: set[SignedVertex] = set(state.anc[u])
    before.add((u, 1))

    after: set[SignedVertex] = set()
    for v in graph.out_neighbors(u):
        arc_signs = graph.signs(u, v)
        if v in U or v in Y:
            after.update((v, s) for s in arc_signs)
        elif v in R:
            for a, sigma in state.dec[v]:
                if a in U or a in Y:
                    after.update((a, s * sigma) for s in arc_signs)

    for a, sigma_a in sorted(after):
        if a in P:
            continue
        for b, sigma_b in sorted(before):
            closing = graph.signs(a, b)
            for s in sorted(closing, reverse=True):
                if sigma_a * sigma_b * s > 0:
                    P.add(a)
                    U.discard(a)
                    Y.discard(a)
                    logger.debug("%d -> P (positive circuit through %d, %d)", a, u, b)
                    break
                if a not in Y:
                    U.discard(a)
                    Y.add(a)
                    logger.debug("%d -> Y (negative circuit through %d, %d)", a, u, b)
            if a in P:
                break
            path_sign = sigma_a * sigma_b
            state.dec[b].add((a, path_sign))
            state.anc[a].add((b, path_sign))


def pfvs_algorithm(graph: SignedDigraph, order: Sequence[int]) -> PfvsOutput:
    """Build ``P`` (a PFVS) and ``O`` such that ``P ∪ O`` is a minimal FVS.

    Args:
        graph: Signed interaction graph
        order: Permutation of the vertices; earlier vertices are processed first

    Raises:
        InvalidScheduleError: If ``order`` is not a permutation of the vertices
    """
    seq = check_order(graph, order)
    position = {v: i for i, v in enumerate(seq)}
    everything = set(graph.vertices)

    positive_loops = set(graph.loops(1))
    negative_loops = set(graph.loops(-1)) - positive_loops
    stripped = graph.without_arcs((v, v, -1) for v in graph.loops(-1))

    P: set[int] = set(positive_loops)
    R: set[int] = set()
    O: set[int] = set()  # noqa: E741
    Y: set[int] = set(negative_loops)
    state = ForceState()

    phase = 0
    while P | R != everything:
        phase += 1
        if phase == 1:
            U = everything - P - Y
        else:
            U = everything - P - R
            Y = set()
        while U:
            u = min(U, key=position.__getitem__)
            U.discard(u)
            R.add(u)
            if phase > 1:
                O.add(u)
            force_step(stripped, state, u, U, Y, R, P)
        logger.debug("Phase %d done: P=%s R=%s Y=%s", phase, sorted(P), sorted(R), sorted(Y))

    logger.info("PFVS construction: |P|=%d |F|=%d in %d phases", len(P), len(P | O), phase)
    return PfvsOutput(frozenset(P), frozenset(O), frozenset(R), phase, tuple(seq))


def best_random_pfvs(
    graph: SignedDigraph, rng: random.Random, tries: int | None = None
) -> PfvsOutput:
    """Run the construction on random orders and keep the smallest ``P``.

    Ties go to the smaller ``F``, then to the first run. ``tries`` defaults
    to ``ceil(n / 2)``.
    """
    if tries is None:
        tries = max(1, math.ceil(graph.n / 2))
    best: PfvsOutput | None = None
    for _ in range(tries):
        out = pfvs_algorithm(graph, random_order(graph, rng))
        if best is None or (len(out.P), len(out.F)) < (len(best.P), len(best.F)):
            best = out
    assert best is not None
    return best


def verify_pfvs_output(
    graph: SignedDigraph, output: PfvsOutput, limits: Limits | None = None
) -> None:
    """Check that ``P`` is a PFVS and ``F`` a minimal FVS.

    Raises:
        ResourceLimitError: If the graph exceeds ``limits.verify_max_n``
        InvalidPfvsError: If a positive cycle survives ``G - P``
        InvalidFvsError: If ``F`` is not a minimal FVS
    """
    limits = resolve_limits(limits)
    limits.guard("verify_max_n", graph.n)
    cycle = find_positive_cycle(graph, output.P, limits)
    if cycle is not None:
        raise InvalidPfvsError(output.P, cycle.vertices)
    if not is_acyclic(graph, output.F):
        raise InvalidFvsError(output.F)
    if not is_minimal_fvs(graph, output.F):
        raise InvalidFvsError(output.F, "a vertex can be dropped and the rest is still an FVS")
