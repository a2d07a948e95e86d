"""Cycle machinery on signed digraphs: enumeration, FVS / PFVS predicates and
exact transversal numbers by subset search."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator

import networkx as nx

from ..config import Limits, resolve_limits
from ..errors import ResourceLimitError
from .digraph import SignedDigraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SignedCycle:
    """Closed path ``vertices[0] -> vertices[1] -> ... -> vertices[0]``.

    ``signs[i]`` is the sign of the arc leaving ``vertices[i]``.
    """

    vertices: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def sign(self) -> int:
        out = 1
        for s in self.signs:
            out *= s
        return out

    @property
    def is_positive(self) -> bool:
        return self.sign > 0

    def arcs(self) -> list[tuple[int, int, int]]:
        k = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % k], self.signs[i]) for i in range(k)]


def _rotate(cycle: list[int]) -> tuple[int, ...]:
    start = cycle.index(min(cycle))
    return tuple(cycle[start:] + cycle[:start])


def _vertex_cycles(graph: SignedDigraph, cap: int) -> Iterator[tuple[int, ...]]:
    """Simple cycles of the unsigned view, each rotated to start at its least vertex."""
    for count, cycle in enumerate(nx.simple_cycles(graph.to_networkx()), start=1):
        if count > cap:
            logger.warning("Cycle enumeration stopped after %d cycles", cap)
            raise ResourceLimitError("cycle_cap", count, cap)
        yield _rotate(cycle)


def _expand(graph: SignedDigraph, cycle: tuple[int, ...]) -> Iterator[SignedCycle]:
    k = len(cycle)
    choices = [sorted(graph.signs(cycle[i], cycle[(i + 1) % k]), reverse=True) for i in range(k)]
    for signs in product(*choices):
        yield SignedCycle(cycle, tuple(signs))


def enumerate_cycles(graph: SignedDigraph, limits: Limits | None = None) -> list[SignedCycle]:
    """All simple cycles with signs.

    A pair carrying both signs yields one cycle per sign choice. The result is
    sorted by vertex sequence, positive variants first.

    Raises:
        ResourceLimitError: If more than ``limits.cycle_cap`` cycles exist
    """
    cap = resolve_limits(limits).cycle_cap
    cycles: list[SignedCycle] = []
    for vertex_cycle in _vertex_cycles(graph, cap):
        for cycle in _expand(graph, vertex_cycle):
            cycles.append(cycle)
            if len(cycles) > cap:
                raise ResourceLimitError("cycle_cap", len(cycles), cap)
    cycles.sort(key=lambda c: (len(c.vertices), c.vertices, tuple(-s for s in c.signs)))
    return cycles


def positive_cycles(graph: SignedDigraph, limits: Limits | None = None) -> list[SignedCycle]:
    return [c for c in enumerate_cycles(graph, limits) if c.is_positive]


def find_positive_cycle(
    graph: SignedDigraph, removed: Iterable[int] = (), limits: Limits | None = None
) -> SignedCycle | None:
    """Return one positive cycle of ``graph - removed``, or None.

    Stops at the first hit instead of listing every cycle.
    """
    cap = resolve_limits(limits).cycle_cap
    rest = graph.remove(removed)
    for vertex_cycle in _vertex_cycles(rest, cap):
        for cycle in _expand(rest, vertex_cycle):
            if cycle.is_positive:
                return cycle
    return None


def is_acyclic(graph: SignedDigraph, removed: Iterable[int] = ()) -> bool:
    """True iff ``graph - removed`` has no cycle; loops count as cycles."""
    return nx.is_directed_acyclic_graph(graph.remove(removed).to_networkx())


def is_pfvs(graph: SignedDigraph, vertices: Iterable[int], limits: Limits | None = None) -> bool:
    """True iff no positive cycle survives the removal of ``vertices``."""
    return find_positive_cycle(graph, vertices, limits) is None


def is_minimal_fvs(graph: SignedDigraph, vertices: Iterable[int]) -> bool:
    """True iff ``vertices`` is an FVS and no single vertex can be dropped from it."""
    fvs = frozenset(vertices)
    if not is_acyclic(graph, fvs):
        return False
    return all(not is_acyclic(graph, fvs - {v}) for v in fvs)


def _smallest_hitting_set(
    vertices: list[int], masks: list[int], label: str
) -> tuple[int, frozenset[int]]:
    bit = {v: 1 << i for i, v in enumerate(vertices)}
    for size in range(len(vertices) + 1):
        for combo in combinations(vertices, size):
            chosen = 0
            for v in combo:
                chosen |= bit[v]
            if all(mask & chosen for mask in masks):
                logger.debug("%s = %d, witness %s", label, size, combo)
                return size, frozenset(combo)
    raise AssertionError("the full vertex set always hits every cycle")


def _cycle_masks(vertices: list[int], cycles: Iterable[SignedCycle]) -> list[int]:
    bit = {v: 1 << i for i, v in enumerate(vertices)}
    masks = set()
    for cycle in cycles:
        mask = 0
        for v in cycle.vertices:
            mask |= bit[v]
        masks.add(mask)
    # Supersets are hit whenever their subsets are
    ordered = sorted(masks, key=lambda m: bin(m).count("1"))
    kept: list[int] = []
    for mask in ordered:
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    return kept


def brute_tau(graph: SignedDigraph, limits: Limits | None = None) -> tuple[int, frozenset[int]]:
    """Transversal number: size of a minimum FVS, with a witness.

    Raises:
        ResourceLimitError: If the graph has more than ``limits.brute_tau_max_n`` vertices
    """
    limits = resolve_limits(limits)
    limits.guard("brute_tau_max_n", graph.n)
    vertices = sorted(graph.vertices)
    for size in range(len(vertices) + 1):
        for combo in combinations(vertices, size):
            if is_acyclic(graph, combo):
                logger.debug("tau = %d, witness %s", size, combo)
                return size, frozenset(combo)
    raise AssertionError("removing every vertex leaves an acyclic graph")


def brute_tau_plus(
    graph: SignedDigraph, limits: Limits | None = None
) -> tuple[int, frozenset[int]]:
    """Positive transversal number: size of a minimum PFVS, with a witness.

    Raises:
        ResourceLimitError: On too many vertices or too many cycles
    """
    limits = resolve_limits(limits)
    limits.guard("brute_tau_max_n", graph.n)
    vertices = sorted(graph.vertices)
    masks = _cycle_masks(vertices, positive_cycles(graph, limits))
    return _smallest_hitting_set(vertices, masks, "tau+")
