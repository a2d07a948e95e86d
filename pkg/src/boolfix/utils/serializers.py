"""Conversions between command-line text, engine objects and JSON documents."""

from __future__ import annotations

from typing import Iterable, Optional

from pydantic import BaseModel

from ..errors import InvalidSetError
from ..graph.digraph import SignedDigraph
from ..models import ArcDocument, GraphDocument, PfvsDocument
from ..network.network import BooleanNetwork
from ..pfvs.algorithm import PfvsOutput


def parse_vertex(net: BooleanNetwork, token: str) -> int:
    """Resolve a component name or a 1-based index to a 0-based index.

    Digits always mean 1-based positions. Component names cannot start with a
    digit in the file format, so no name is shadowed.

    Raises:
        InvalidSetError: If the token names no component
    """
    token = token.strip()
    if token.isdigit():
        position = int(token)
        if not 1 <= position <= net.n:
            raise InvalidSetError(
                f"vertex {position} out of range 1..{net.n}", {"vertex": position}
            )
        return position - 1
    if token in net.names:
        return net.index(token)
    raise InvalidSetError(f"unknown component '{token}'", {"vertex": token})


def parse_vertex_list(net: BooleanNetwork, text: Optional[str]) -> Optional[list[int]]:
    """Parse ``"x1,x4"`` or ``"1,4"``; ``None`` stays ``None`` and ``""`` is empty."""
    if text is None:
        return None
    return [parse_vertex(net, part) for part in text.split(",") if part.strip()]


def names_of(net: BooleanNetwork, vertices: Iterable[int]) -> list[str]:
    """Component names of ``vertices`` in index order."""
    return [net.names[v] for v in sorted(vertices)]


def pfvs_document(net: BooleanNetwork, output: PfvsOutput, name: str) -> PfvsDocument:
    return PfvsDocument(
        network=name,
        order=[net.names[v] for v in output.order_used],
        P=names_of(net, output.P),
        O=names_of(net, output.O),
        F=names_of(net, output.F),
        phases=output.phases,
    )


def graph_document(net: BooleanNetwork, graph: SignedDigraph, name: str) -> GraphDocument:
    return GraphDocument(
        network=name,
        n=graph.n,
        arcs=[
            ArcDocument(source=net.names[u], target=net.names[v], sign=s)
            for u, v, s in graph.sorted_arcs()
        ],
    )


def to_json(document: BaseModel) -> str:
    """Stable JSON text: fixed key order, ``None`` fields dropped."""
    return document.model_dump_json(indent=2, exclude_none=True)
