"""Signed interaction graphs."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

from ..network.network import BooleanNetwork

logger = logging.getLogger(__name__)

Arc = tuple[int, int, int]


@dataclass(frozen=True, slots=True)
class SignedDigraph:
    """Vertex set with a set of signed arcs ``(u, v, sign)``.

    A pair ``(u, v)`` may carry both signs; loops are allowed. Vertices keep
    their network indices when the graph is restricted.
    """

    vertices: frozenset[int]
    arcs: frozenset[Arc]
    _succ: dict[int, dict[int, frozenset[int]]] = field(repr=False, compare=False, hash=False)
    _pred: dict[int, dict[int, frozenset[int]]] = field(repr=False, compare=False, hash=False)

    @classmethod
    def from_arcs(cls, vertices: int | Iterable[int], arcs: Iterable[Arc]) -> "SignedDigraph":
        """Build a graph on ``range(vertices)`` (or the given vertex set) from signed arcs."""
        verts = frozenset(range(vertices)) if isinstance(vertices, int) else frozenset(vertices)
        arc_set = frozenset((int(u), int(v), 1 if s > 0 else -1) for u, v, s in arcs)
        succ: dict[int, dict[int, set[int]]] = defaultdict(lambda: defaultdict(set))
        pred: dict[int, dict[int, set[int]]] = defaultdict(lambda: defaultdict(set))
        for u, v, s in arc_set:
            if u not in verts or v not in verts:
                raise ValueError(f"arc ({u}, {v}) leaves the vertex set")
            succ[u][v].add(s)
            pred[v][u].add(s)
        return cls(
            verts,
            arc_set,
            {u: {v: frozenset(ss) for v, ss in nbrs.items()} for u, nbrs in succ.items()},
            {v: {u: frozenset(ss) for u, ss in nbrs.items()} for v, nbrs in pred.items()},
        )

    @property
    def n(self) -> int:
        return len(self.vertices)

    def signs(self, u: int, v: int) -> frozenset[int]:
        """Signs carried by the pair ``(u, v)``; empty when there is no arc."""
        return self._succ.get(u, {}).get(v, frozenset())

    def out_neighbors(self, u: int) -> list[int]:
        return sorted(self._succ.get(u, {}))

    def in_neighbors(self, v: int) -> list[int]:
        return sorted(self._pred.get(v, {}))

    def loops(self, sign: int) -> frozenset[int]:
        """Vertices carrying a self-loop of the given sign."""
        return frozenset(u for u, v, s in self.arcs if u == v and s == sign)

    def induced(self, vertices: Iterable[int]) -> "SignedDigraph":
        keep = frozenset(vertices) & self.vertices
        return SignedDigraph.from_arcs(
            keep, ((u, v, s) for u, v, s in self.arcs if u in keep and v in keep)
        )

    def remove(self, vertices: Iterable[int]) -> "SignedDigraph":
        """``G - X``: drop the vertices and every arc touching them."""
        return self.induced(self.vertices - frozenset(vertices))

    def without_arcs(self, drop: Iterable[Arc]) -> "SignedDigraph":
        dropped = frozenset(drop)
        return SignedDigraph.from_arcs(self.vertices, self.arcs - dropped)

    def to_networkx(self) -> nx.DiGraph:
        """Unsigned view; each edge keeps its sign set under ``"signs"``."""
        graph = nx.DiGraph()
        graph.add_nodes_from(sorted(self.vertices))
        for u, nbrs in self._succ.items():
            for v, signs in nbrs.items():
                graph.add_edge(u, v, signs=signs)
        return graph

    def sorted_arcs(self) -> list[Arc]:
        """Arcs ordered by target, then source, positive before negative."""
        return sorted(self.arcs, key=lambda a: (a[1], a[0], -a[2]))


def derive(net: BooleanNetwork) -> SignedDigraph:
    """Interaction graph ``G(f)`` read off the compiled truth tables.

    ``(u, v, +1)`` is present iff raising ``x_u`` can raise ``f_v``;
    ``(u, v, -1)`` iff it can lower it.
    """
    arcs: list[Arc] = []
    for v, comp in enumerate(net.components):
        for u, signs in comp.arc_signs().items():
            arcs.extend((u, v, s) for s in signs)
    graph = SignedDigraph.from_arcs(net.n, arcs)
    logger.debug("Derived interaction graph: %d vertices, %d arcs", graph.n, len(graph.arcs))
    return graph


def degrees(graph: SignedDigraph) -> dict[int, tuple[int, int, int]]:
    """Per-vertex ``(in-degree, out-degree, degree)`` counted as neighbour sets.

    A loop makes the vertex its own in- and out-neighbour.
    """
    result = {}
    for v in sorted(graph.vertices):
        d_in = len(graph.in_neighbors(v))
        d_out = len(graph.out_neighbors(v))
        result[v] = (d_in, d_out, d_in + d_out)
    return result
