"""Boolean networks, states, schedules and their evaluation.

A network is an ordered tuple of components. Each component carries its
expression tree plus a compiled truth table over its *semantic* support, the
inputs that can actually flip the function. All evaluation routines below
read the compiled tables; the trees are kept for printing, substitution and
for independent cross-checks.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from ..config import Limits, resolve_limits
from ..errors import InvalidNetworkError, InvalidScheduleError, ResourceLimitError
from .expr import FALSE, TRUE, BooleanExpr, Const, truth_table

logger = logging.getLogger(__name__)


# ============================================================================
# State / Schedule
# ============================================================================


@dataclass(frozen=True, slots=True)
class State:
    """Dense bit vector over component indices."""

    bits: tuple[int, ...]

    @classmethod
    def zeros(cls, n: int) -> "State":
        return cls((0,) * n)

    @classmethod
    def from_string(cls, text: str) -> "State":
        """Parse a bit string such as ``"10010000"`` (component 0 first)."""
        if any(ch not in "01" for ch in text):
            raise ValueError(f"Not a bit string: {text!r}")
        return cls(tuple(1 if ch == "1" else 0 for ch in text))

    @classmethod
    def from_int(cls, value: int, n: int) -> "State":
        """Component ``i`` takes bit ``i`` of ``value``."""
        return cls(tuple((value >> i) & 1 for i in range(n)))

    def to_int(self) -> int:
        return sum(bit << i for i, bit in enumerate(self.bits))

    def with_bit(self, index: int, value: int) -> "State":
        bits = list(self.bits)
        bits[index] = 1 if value else 0
        return State(tuple(bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, index: int) -> int:
        return self.bits[index]

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


@dataclass(frozen=True, slots=True)
class Schedule:
    """Sequential update order; a permutation of ``range(n)``."""

    order: tuple[int, ...]

    @classmethod
    def of(cls, order: Iterable[int], n: int) -> "Schedule":
        """Validate ``order`` against ``n`` and build the schedule.

        Raises:
            InvalidScheduleError: If ``order`` is not a permutation of ``range(n)``
        """
        seq = tuple(int(v) for v in order)
        if len(seq) != n or set(seq) != set(range(n)):
            raise InvalidScheduleError(
                f"schedule must be a permutation of {n} components, got {list(seq)}",
                details={"order": list(seq), "n": n},
            )
        return cls(seq)

    @classmethod
    def identity(cls, n: int) -> "Schedule":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)


# ============================================================================
# Components / Network
# ============================================================================


@dataclass(frozen=True, slots=True)
class Component:
    """One named coordinate of the network, compiled for fast evaluation."""

    name: str
    expr: BooleanExpr
    support: tuple[int, ...]
    table: np.ndarray = field(repr=False, compare=False)
    lut: bytes = field(repr=False, compare=False)

    @classmethod
    def compile(cls, name: str, expr: BooleanExpr, max_in_degree: int) -> "Component":
        """Compute the semantic support of ``expr`` and its truth table on it.

        Raises:
            ResourceLimitError: If the syntactic support exceeds ``max_in_degree``
        """
        syntactic = tuple(sorted(expr.variables()))
        if len(syntactic) > max_in_degree:
            logger.warning(
                "Component %s reads %d inputs (cap %d)", name, len(syntactic), max_in_degree
            )
            raise ResourceLimitError("max_in_degree", len(syntactic), max_in_degree)

        table = truth_table(expr, syntactic)
        rows = np.arange(table.size, dtype=np.int64)
        support = tuple(
            v for j, v in enumerate(syntactic) if np.any(table != table[rows ^ (1 << j)])
        )
        if support != syntactic:
            table = truth_table(expr, support)
        return cls(name, expr, support, table, table.tobytes())

    @classmethod
    def constant(cls, name: str, value: int) -> "Component":
        table = np.array([1 if value else 0], dtype=np.uint8)
        return cls(name, TRUE if value else FALSE, (), table, table.tobytes())

    @property
    def is_constant(self) -> bool:
        return not self.support

    def local(self, bits: Sequence[int]) -> int:
        """Evaluate on a full state through the compiled table."""
        row = 0
        for j, u in enumerate(self.support):
            if bits[u]:
                row |= 1 << j
        return self.lut[row]

    def arc_signs(self) -> dict[int, frozenset[int]]:
        """Signs of the influence of each support input on this component.

        ``+1`` when raising the input can raise the output, ``-1`` when it can
        lower it; both may be present.
        """
        signs: dict[int, frozenset[int]] = {}
        rows = np.arange(self.table.size, dtype=np.int64)
        values = self.table.astype(np.int8)
        for j, u in enumerate(self.support):
            low = rows[((rows >> j) & 1) == 0]
            delta = values[low | (1 << j)] - values[low]
            found = set()
            if np.any(delta > 0):
                found.add(1)
            if np.any(delta < 0):
                found.add(-1)
            signs[u] = frozenset(found)
        return signs


@dataclass(frozen=True, slots=True)
class BooleanNetwork:
    """Immutable Boolean network; component order defines indices 0..n-1."""

    components: tuple[Component, ...]
    max_in_degree: int

    @classmethod
    def from_exprs(
        cls,
        names: Sequence[str],
        exprs: Sequence[BooleanExpr],
        limits: Limits | None = None,
    ) -> "BooleanNetwork":
        """Compile a network from names and expression trees.

        Raises:
            InvalidNetworkError: On duplicate names or out-of-range variables
            ResourceLimitError: If a component reads more inputs than allowed
        """
        limits = resolve_limits(limits)
        if len(names) != len(exprs):
            raise InvalidNetworkError(
                f"{len(names)} names for {len(exprs)} expressions",
            )
        if len(set(names)) != len(names):
            dupes = sorted({name for name in names if list(names).count(name) > 1})
            raise InvalidNetworkError(f"duplicate component names: {dupes}", {"names": dupes})
        n = len(names)
        for name, expr in zip(names, exprs):
            bad = [v for v in expr.variables() if not 0 <= v < n]
            if bad:
                raise InvalidNetworkError(
                    f"component {name} reads indices {sorted(bad)} outside [0, {n})",
                    {"component": name, "indices": sorted(bad)},
                )
        components = tuple(
            Component.compile(name, expr, limits.max_in_degree) for name, expr in zip(names, exprs)
        )
        logger.debug("Compiled network with %d components", n)
        return cls(components, limits.max_in_degree)

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.components)

    def index(self, name: str) -> int:
        """Return the index of the component called ``name``."""
        for i, comp in enumerate(self.components):
            if comp.name == name:
                return i
        raise KeyError(name)

    def support(self, v: int) -> tuple[int, ...]:
        return self.components[v].support

    def is_regulatory(self) -> bool:
        """True when no input acts on a component with both signs."""
        return all(
            len(signs) == 1 for comp in self.components for signs in comp.arc_signs().values()
        )

    def with_components(self, replacements: Mapping[int, BooleanExpr]) -> "BooleanNetwork":
        """Return a copy with some local functions replaced (others stay compiled)."""
        comps = list(self.components)
        for v, expr in replacements.items():
            name = comps[v].name
            if isinstance(expr, Const):
                comps[v] = Component.constant(name, expr.value)
            else:
                comps[v] = Component.compile(name, expr, self.max_in_degree)
        return BooleanNetwork(tuple(comps), self.max_in_degree)

    def check_state(self, x: State) -> None:
        if len(x) != self.n:
            raise InvalidNetworkError(
                f"state of length {len(x)} for a network of {self.n} components"
            )


# ============================================================================
# Evaluation
# ============================================================================


def eval_local(net: BooleanNetwork, v: int, x: State) -> int:
    """Return ``f_v(x)``."""
    return net.components[v].local(x.bits)


def apply(net: BooleanNetwork, x: State) -> State:
    """Synchronous image ``f(x)``."""
    bits = x.bits
    return State(tuple(comp.local(bits) for comp in net.components))


def apply_partial(net: BooleanNetwork, u: int, x: State) -> State:
    """Partial evaluation ``f^u(x)``: only coordinate ``u`` is updated."""
    return x.with_bit(u, net.components[u].local(x.bits))


def sweep(net: BooleanNetwork, order: Sequence[int], buf: list[int]) -> bool:
    """Update ``buf`` in place, one component at a time in ``order``.

    Returns:
        True if any coordinate changed
    """
    comps = net.components
    changed = False
    for v in order:
        value = comps[v].local(buf)
        if value != buf[v]:
            buf[v] = value
            changed = True
    return changed


def apply_schedule(net: BooleanNetwork, pi: Schedule, x: State) -> State:
    """Sequential image ``f^pi(x)``: partial evaluations in order pi_1, ..., pi_n."""
    buf = list(x.bits)
    sweep(net, pi.order, buf)
    return State(tuple(buf))


def iterate(net: BooleanNetwork, k: int, x: State) -> State:
    """Self-composition ``f^<k>(x)``; ``k = 0`` returns ``x``."""
    if k < 0:
        raise ValueError(f"iteration count must be non-negative, got {k}")
    for _ in range(k):
        nxt = apply(net, x)
        if nxt == x:
            break
        x = nxt
    return x


def is_fixed_point(net: BooleanNetwork, x: State) -> bool:
    bits = x.bits
    return all(comp.local(bits) == bits[v] for v, comp in enumerate(net.components))


def schedule_trace(net: BooleanNetwork, pi: Schedule, x: State, passes: int) -> list[State]:
    """Every intermediate state of ``passes`` sequential sweeps.

    The first entry is ``x``; each following entry is the state right after
    one partial evaluation, so pass ``p`` ends at index ``p * n``.
    """
    trace = [x]
    buf = list(x.bits)
    comps = net.components
    for _ in range(passes):
        for v in pi.order:
            buf[v] = comps[v].local(buf)
            trace.append(State(tuple(buf)))
    return trace


def restrict(net: BooleanNetwork, a: Mapping[int, int]) -> BooleanNetwork:
    """Clamp components to constants: the network ``fa``.

    Components in ``a`` become ``Const(a[v])``; every other component keeps
    its compiled form, so its support is unchanged.
    """
    if not a:
        return net
    comps = list(net.components)
    for v, value in a.items():
        if not 0 <= v < net.n:
            raise InvalidNetworkError(f"index {v} outside [0, {net.n})")
        comps[v] = Component.constant(comps[v].name, value)
    return BooleanNetwork(tuple(comps), net.max_in_degree)
