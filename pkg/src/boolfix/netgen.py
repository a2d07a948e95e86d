"""Random Boolean networks with a planted minimum FVS and PFVS.

Layout, in topological order: free upstream vertices, then ``tau`` modules,
then free downstream vertices. Module ``i`` is a planted vertex ``c_i``
followed by a chain ``m_1 -> ... -> m_L`` with extra forward arcs, closed by
``c_i -> m_1`` and ``m_L -> c_i``. Arcs between blocks only point forward,
so every cycle lies inside one module and runs through its planted vertex.

Signs inside a module come from a random parity potential ``p``: an arc
``w -> w'`` gets ``(-1)^(p(w)+p(w'))``, and arcs into ``c_i`` are multiplied
by the module sign ``s_i``. Every cycle through ``c_i`` therefore has sign
``s_i``. Local functions are read-once AND/OR formulas of literals whose
polarity is the arc sign, so each wired input is a real input with exactly
that sign.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .config import Limits
from .errors import GenerationError
from .graph.digraph import SignedDigraph
from .netfile import format_network
from .network.expr import FALSE, TRUE, BooleanExpr, Not, Var, conj, disj, literal
from .network.network import BooleanNetwork

logger = logging.getLogger(__name__)


class GenSpec(BaseModel):
    """Parameters of a planted random network."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=1)
    tau: int = Field(default=0, ge=0)
    tau_plus: int = Field(default=0, ge=0)
    fanin: int = Field(default=3, ge=1)
    seed: int = 0

    @model_validator(mode="after")
    def _check_sizes(self) -> "GenSpec":
        if self.tau_plus > self.tau:
            raise ValueError(f"tau_plus ({self.tau_plus}) cannot exceed tau ({self.tau})")
        if self.tau > self.n:
            raise ValueError(f"tau ({self.tau}) cannot exceed n ({self.n})")
        return self


@dataclass(frozen=True, slots=True)
class Module:
    planted: int
    members: tuple[int, ...]
    sign: int


@dataclass(frozen=True, slots=True)
class Planted:
    """A generated network with its planted sets (indices of the network)."""

    network: BooleanNetwork
    fvs: frozenset[int]
    pfvs: frozenset[int]
    modules: tuple[Module, ...]
    spec: GenSpec


def _read_once(literals: list[BooleanExpr], rng: random.Random, op: Optional[str] = None):
    """Random read-once formula over ``literals`` with alternating AND/OR levels."""
    if len(literals) == 1:
        return literals[0]
    op = op or rng.choice(("and", "or"))
    items = list(literals)
    rng.shuffle(items)
    parts = rng.randint(2, min(3, len(items)))
    cuts = sorted(rng.sample(range(1, len(items)), parts - 1))
    groups = [items[i:j] for i, j in zip([0] + cuts, cuts + [len(items)])]
    other = "or" if op == "and" else "and"
    children = [_read_once(group, rng, other) for group in groups]
    return conj(*children) if op == "and" else disj(*children)


def generate(spec: GenSpec, limits: Limits | None = None) -> Planted:
    """Build a network whose transversal numbers are ``spec.tau`` and ``spec.tau_plus``.

    Raises:
        GenerationError: If ``tau`` modules do not fit (each needs a planted
            vertex and at least one other vertex)
        ResourceLimitError: If ``spec.fanin`` exceeds the in-degree cap
    """
    n, tau, fanin = spec.n, spec.tau, spec.fanin
    if 2 * tau > n:
        raise GenerationError(
            f"cannot plant {tau} disjoint cycles in {n} vertices (need 2 * tau <= n)",
            {"n": n, "tau": tau},
        )
    rng = random.Random(spec.seed)

    sizes = [1] * tau
    upstream = downstream = 0
    for _ in range(n - 2 * tau):
        bucket = rng.randrange(tau + 2)
        if bucket == 0:
            upstream += 1
        elif bucket == tau + 1:
            downstream += 1
        else:
            sizes[bucket - 1] += 1

    slot = iter(range(n))
    up = [next(slot) for _ in range(upstream)]
    blocks = []
    for i, size in enumerate(sizes):
        c = next(slot)
        members = [next(slot) for _ in range(size)]
        blocks.append((c, members, 1 if i < spec.tau_plus else -1))
    down = [next(slot) for _ in range(downstream)]

    def random_sign() -> int:
        return rng.choice((1, -1))

    inputs: dict[int, list[tuple[int, int]]] = {}
    for k, v in enumerate(up):
        count = rng.randint(0, min(fanin, k))
        inputs[v] = [(u, random_sign()) for u in sorted(rng.sample(up[:k], count))]

    earlier = list(up)
    for c, members, sign in blocks:
        block = {c, *members}
        potential = {w: rng.randint(0, 1) for w in block}

        def arc_sign(u: int, v: int) -> int:
            if u not in block:
                return random_sign()
            s = -1 if (potential[u] + potential[v]) % 2 else 1
            return s * sign if v == c else s

        def wire(v: int, must: int, pool: list[int]) -> None:
            extra = rng.randint(0, fanin - 1)
            sources = [must] + rng.sample(pool, min(extra, len(pool)))
            inputs[v] = [(u, arc_sign(u, v)) for u in sorted(sources)]

        wire(c, members[-1], members[:-1] + earlier)
        for j, m in enumerate(members):
            if j == 0:
                wire(m, c, list(earlier))
            else:
                wire(m, members[j - 1], [c] + members[: j - 1] + earlier)
        earlier.extend([c, *members])

    for v in down:
        count = rng.randint(1, min(fanin, len(earlier))) if earlier else 0
        inputs[v] = [(u, random_sign()) for u in sorted(rng.sample(earlier, count))]
        earlier.append(v)

    label = list(range(n))
    rng.shuffle(label)
    exprs: list[BooleanExpr] = [FALSE] * n
    for v, wired in inputs.items():
        if wired:
            exprs[label[v]] = _read_once([literal(label[u], s) for u, s in wired], rng)
        else:
            exprs[label[v]] = TRUE if rng.randint(0, 1) else FALSE

    names = [f"x{i + 1}" for i in range(n)]
    net = BooleanNetwork.from_exprs(names, exprs, limits)
    modules = tuple(
        Module(label[c], tuple(label[m] for m in members), sign) for c, members, sign in blocks
    )
    planted = Planted(
        network=net,
        fvs=frozenset(m.planted for m in modules),
        pfvs=frozenset(m.planted for m in modules if m.sign > 0),
        modules=modules,
        spec=spec,
    )
    logger.debug(
        "Generated n=%d tau=%d tau+=%d seed=%d: F=%s P=%s",
        n,
        tau,
        spec.tau_plus,
        spec.seed,
        sorted(planted.fvs),
        sorted(planted.pfvs),
    )
    return planted


def write_network(planted: Planted | BooleanNetwork) -> str:
    """Network-file text of a generated instance."""
    net = planted.network if isinstance(planted, Planted) else planted
    return format_network(net)


# ============================================================================
# Unstructured random instances (test corpora)
# ============================================================================


def random_signed_digraph(
    n: int,
    arc_prob: float,
    rng: random.Random,
    both_prob: float = 0.1,
    loop_prob: float = 0.1,
) -> SignedDigraph:
    """Erdos-Renyi digraph with random signs, some two-signed pairs and some loops."""
    base = nx.gnp_random_graph(n, arc_prob, seed=rng.randrange(2**32), directed=True)
    arcs: list[tuple[int, int, int]] = []
    for u, v in sorted(base.edges()):
        if rng.random() < both_prob:
            arcs.extend([(u, v, 1), (u, v, -1)])
        else:
            arcs.append((u, v, rng.choice((1, -1))))
    for v in range(n):
        if rng.random() < loop_prob:
            arcs.append((v, v, rng.choice((1, -1))))
    return SignedDigraph.from_arcs(n, arcs)


def _random_expr(inputs: list[int], rng: random.Random) -> BooleanExpr:
    if len(inputs) == 1 or rng.random() < 0.2:
        v = rng.choice(inputs)
        return Var(v) if rng.random() < 0.5 else Not(Var(v))
    left_size = rng.randint(1, len(inputs) - 1)
    left = _random_expr(inputs[:left_size], rng)
    right = _random_expr(inputs[left_size:], rng)
    # The right side may reread inputs of the left side
    if rng.random() < 0.3:
        right = _random_expr(inputs, rng)
    node = conj(left, right) if rng.random() < 0.5 else disj(left, right)
    return Not(node) if rng.random() < 0.2 else node


def random_network(
    n: int, fanin: int, rng: random.Random, limits: Limits | None = None
) -> BooleanNetwork:
    """Arbitrary random network: inputs may repeat, so functions need not be monotone."""
    exprs: list[BooleanExpr] = []
    for _ in range(n):
        k = rng.randint(0, min(fanin, n))
        if k == 0:
            exprs.append(TRUE if rng.random() < 0.5 else FALSE)
            continue
        inputs = rng.sample(range(n), k)
        exprs.append(_random_expr(inputs, rng))
    return BooleanNetwork.from_exprs([f"x{i + 1}" for i in range(n)], exprs, limits)
