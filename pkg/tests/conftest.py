"""Test configuration ensuring the src package is importable, plus the
worked example networks shared by the golden tests."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

SRC_PATH = Path(__file__).resolve().parents[1] / "src"
if str(SRC_PATH) not in sys.path:
    sys.path.insert(0, str(SRC_PATH))


# ========== Example Networks (network file format) ==========

FIVE_NODE = """\
# two positive cycles, PFVS {x3, x4}
x1 = !x2 & x5
x2 = (x1 & x3) | (x5 & !x3)
x3 = (!x1 | !x5) & x3 & x4
x4 = (x4 & x3) | (x5 & !x3)
x5 = x4
"""

CHAIN_NET = """\
x1 = !x1 | x4 | x5
x2 = !x2 & x3 & x6
x3 = !x3 & x4
x4 = 1
x5 = 0
x6 = x1 | x3 | x7
x7 = x1 & x4
"""

FIRST_VARIANT = """\
x1 = 1
x2 = !x1 & x3
x3 = x1 & !x2
"""

SECOND_VARIANT = """\
x1 = 1
x2 = !x1 | x3
x3 = x1 | !x2
"""

CLAMP_NET = """\
x1 = x1 | x4 | x5
x2 = x2 & x3 & x6
x3 = x3 & x4
x4 = !x7
x5 = 0
x6 = x1 | x3 | x7
x7 = x1 & x4
"""

EIGHT_NODE = """\
x1 = !x3 | x7
x2 = !x4
x3 = (x2 & x4) | (x2 & x6) | (x4 & x6)
x4 = x2 | !x8
x5 = x3
x6 = !x1 | x5
x7 = !x1 | x8
x8 = x5 & !x7
"""

# Seven-vertex signed graph used for compatible orders and the degree heuristic
# (1-based arcs).
SEVEN_ARCS = [
    (1, 1, 1), (3, 3, 1), (6, 1, 1), (6, 2, 1), (7, 6, 1),
    (7, 1, 1), (7, 2, 1), (4, 3, 1), (1, 7, 1),
    (2, 2, -1), (4, 4, -1), (1, 4, -1), (3, 4, -1),
    (3, 6, -1), (5, 1, -1), (2, 7, -1), (1, 6, -1),
]  # fmt: skip


def zero_based(*vertices: int) -> frozenset[int]:
    """Convert 1-based vertex labels to engine indices."""
    return frozenset(v - 1 for v in vertices)


def one_based(vertices) -> list[int]:
    """Sorted 1-based labels of engine indices."""
    return sorted(v + 1 for v in vertices)


def load(text: str):
    from boolfix.netfile import parse_network

    return parse_network(text)


@pytest.fixture
def five_node():
    return load(FIVE_NODE)


@pytest.fixture
def chain_net():
    return load(CHAIN_NET)


@pytest.fixture
def first_variant():
    return load(FIRST_VARIANT)


@pytest.fixture
def second_variant():
    return load(SECOND_VARIANT)


@pytest.fixture
def clamp_net():
    return load(CLAMP_NET)


@pytest.fixture
def eight_node():
    return load(EIGHT_NODE)


@pytest.fixture
def seven_graph():
    from boolfix.graph.digraph import SignedDigraph

    return SignedDigraph.from_arcs(7, [(u - 1, v - 1, s) for u, v, s in SEVEN_ARCS])


@pytest.fixture
def write_net(tmp_path: Path):
    """Write network text to a file under ``tmp_path`` and return its path."""

    def _write(text: str, name: str = "net.bn") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
