"""Vertex orders: the degree heuristic, random shuffles, and schedules
compatible with a feedback vertex set ``F`` and a PFVS ``P ⊆ F``."""

from __future__ import annotations

import logging
import random
from typing import Iterable, Sequence

import networkx as nx

from ..errors import InvalidFvsError, InvalidScheduleError, InvalidSetError
from ..graph.cycles import is_acyclic
from ..graph.digraph import SignedDigraph, degrees
from ..network.network import Schedule

logger = logging.getLogger(__name__)


def min_order(graph: SignedDigraph) -> list[int]:
    """Vertices from lowest to highest ``(degree, in-degree)``, ties by index."""
    table = degrees(graph)
    return sorted(graph.vertices, key=lambda v: (table[v][2], table[v][0], v))


def random_order(graph: SignedDigraph, rng: random.Random) -> list[int]:
    order = sorted(graph.vertices)
    rng.shuffle(order)
    return order


def check_order(graph: SignedDigraph, order: Sequence[int]) -> list[int]:
    """Return ``order`` as a list after checking it is a permutation of the vertices.

    Raises:
        InvalidScheduleError: If vertices are missing, repeated or unknown
    """
    seq = [int(v) for v in order]
    if len(seq) != graph.n or set(seq) != graph.vertices:
        raise InvalidScheduleError(
            f"order must list each of the {graph.n} vertices once, got {seq}",
            details={"order": seq},
        )
    return seq


def _check_sets(graph: SignedDigraph, fvs: frozenset[int], pfvs: frozenset[int]) -> None:
    unknown = (fvs | pfvs) - graph.vertices
    if unknown:
        raise InvalidSetError(
            f"vertices {sorted(unknown)} are not in the graph", {"vertices": sorted(unknown)}
        )
    if not pfvs <= fvs:
        raise InvalidSetError(
            f"P must be a subset of F; {sorted(pfvs - fvs)} are only in P",
            {"P": sorted(pfvs), "F": sorted(fvs)},
        )


def compatible_order(graph: SignedDigraph, fvs: Iterable[int], pfvs: Iterable[int]) -> Schedule:
    """Schedule placing ``P`` first, ``V \\ F`` in topological order, ``F \\ P`` last.

    Raises:
        InvalidSetError: If ``P`` is not inside ``F``
        InvalidFvsError: If ``G - F`` still has a cycle
    """
    F = frozenset(fvs)
    P = frozenset(pfvs)
    _check_sets(graph, F, P)
    if not is_acyclic(graph, F):
        raise InvalidFvsError(F)

    middle = list(nx.lexicographical_topological_sort(graph.remove(F).to_networkx()))
    order = sorted(P) + middle + sorted(F - P)
    logger.debug("Compatible order for F=%s, P=%s: %s", sorted(F), sorted(P), order)
    return Schedule(tuple(order))


def random_compatible_order(
    graph: SignedDigraph, fvs: Iterable[int], pfvs: Iterable[int], rng: random.Random
) -> Schedule:
    """Draw a compatible schedule with random ties at every step."""
    F = frozenset(fvs)
    P = frozenset(pfvs)
    _check_sets(graph, F, P)
    if not is_acyclic(graph, F):
        raise InvalidFvsError(F)

    head = sorted(P)
    tail = sorted(F - P)
    rng.shuffle(head)
    rng.shuffle(tail)

    rest = graph.remove(F)
    indegree = {v: len(rest.in_neighbors(v)) for v in rest.vertices}
    ready = sorted(v for v, d in indegree.items() if d == 0)
    middle: list[int] = []
    while ready:
        v = ready.pop(rng.randrange(len(ready)))
        middle.append(v)
        for w in rest.out_neighbors(v):
            indegree[w] -= 1
            if indegree[w] == 0:
                ready.append(w)
    return Schedule(tuple(head + middle + tail))


def is_compatible(
    graph: SignedDigraph, fvs: Iterable[int], pfvs: Iterable[int], pi: Schedule | Sequence[int]
) -> bool:
    """Check the three compatibility conditions of ``pi`` with ``F`` and ``P``.

    ``P`` precedes every other vertex, ``F \\ P`` follows every other vertex,
    and every arc between vertices outside ``F`` points forward in ``pi``.
    """
    F = frozenset(fvs)
    P = frozenset(pfvs)
    order = list(pi.order if isinstance(pi, Schedule) else pi)
    if len(order) != graph.n or set(order) != graph.vertices or not P <= F:
        return False
    pos = {v: i for i, v in enumerate(order)}
    k = len(P)
    if any(pos[v] >= k for v in P):
        return False
    tail = len(order) - len(F - P)
    if any(pos[v] < tail for v in F - P):
        return False
    for u, v, _ in graph.arcs:
        if u in F or v in F or u == v:
            continue
        if pos[u] >= pos[v]:
            return False
    return True


def complete_fvs(graph: SignedDigraph, pfvs: Iterable[int], order: Sequence[int]) -> frozenset[int]:
    """Extend ``pfvs`` to an FVS that is minimal among the FVSs containing it.

    Starts from every vertex and drops vertices outside ``pfvs`` in reverse
    ``order`` while the remainder stays a feedback vertex set.
    """
    P = frozenset(pfvs)
    fvs = set(graph.vertices)
    for v in reversed(list(order)):
        if v in P:
            continue
        if is_acyclic(graph, fvs - {v}):
            fvs.discard(v)
    return frozenset(fvs)
