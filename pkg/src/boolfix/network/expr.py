"""Expression trees for local activation functions.

Five node kinds cover every formula the engine reads: constants, variables
(component indices), negation and n-ary conjunction / disjunction. Nodes are
immutable and hashable so networks built from them can be shared freely.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

# Binding strength used by the printer: | < & < ! < atoms
_PREC_OR = 1
_PREC_AND = 2
_PREC_NOT = 3
_PREC_ATOM = 4


class BooleanExpr(ABC):
    """Base class of all expression nodes."""

    __slots__ = ()

    @abstractmethod
    def evaluate(self, bits: Sequence[int]) -> int:
        """Evaluate the tree on a full state given as a bit sequence."""

    @abstractmethod
    def evaluate_columns(self, columns: Mapping[int, np.ndarray], size: int) -> np.ndarray:
        """Evaluate the tree on many assignments at once.

        Args:
            columns: Boolean array per variable index, all of length ``size``
            size: Number of assignments

        Returns:
            Boolean array of length ``size``
        """

    @abstractmethod
    def variables(self) -> frozenset[int]:
        """Return the indices that occur syntactically in the tree."""

    @abstractmethod
    def substitute(self, mapping: Mapping[int, int]) -> "BooleanExpr":
        """Replace variables by constants and fold the result."""

    @abstractmethod
    def remap(self, mapping: Mapping[int, int]) -> "BooleanExpr":
        """Rename variable indices through ``mapping`` (old index to new)."""

    @abstractmethod
    def _text(self, names: Sequence[str]) -> tuple[str, int]:
        """Return printed form and its binding strength."""

    def to_text(self, names: Sequence[str]) -> str:
        """Print the tree in network-file syntax with minimal parentheses."""
        return self._text(names)[0]


@dataclass(frozen=True, slots=True)
class Const(BooleanExpr):
    value: int

    def __post_init__(self) -> None:
        if self.value not in (0, 1):
            raise ValueError(f"Boolean constant must be 0 or 1, got {self.value!r}")

    def evaluate(self, bits: Sequence[int]) -> int:
        return self.value

    def evaluate_columns(self, columns: Mapping[int, np.ndarray], size: int) -> np.ndarray:
        return np.full(size, bool(self.value))

    def variables(self) -> frozenset[int]:
        return frozenset()

    def substitute(self, mapping: Mapping[int, int]) -> BooleanExpr:
        return self

    def remap(self, mapping: Mapping[int, int]) -> BooleanExpr:
        return self

    def _text(self, names: Sequence[str]) -> tuple[str, int]:
        return str(self.value), _PREC_ATOM


@dataclass(frozen=True, slots=True)
class Var(BooleanExpr):
    index: int

    def evaluate(self, bits: Sequence[int]) -> int:
        return 1 if bits[self.index] else 0

    def evaluate_columns(self, columns: Mapping[int, np.ndarray], size: int) -> np.ndarray:
        return columns[self.index]

    def variables(self) -> frozenset[int]:
        return frozenset((self.index,))

    def substitute(self, mapping: Mapping[int, int]) -> BooleanExpr:
        if self.index in mapping:
            return TRUE if mapping[self.index] else FALSE
        return self

    def remap(self, mapping: Mapping[int, int]) -> BooleanExpr:
        return Var(mapping[self.index])

    def _text(self, names: Sequence[str]) -> tuple[str, int]:
        return names[self.index], _PREC_ATOM


@dataclass(frozen=True, slots=True)
class Not(BooleanExpr):
    child: BooleanExpr

    def evaluate(self, bits: Sequence[int]) -> int:
        return 1 - self.child.evaluate(bits)

    def evaluate_columns(self, columns: Mapping[int, np.ndarray], size: int) -> np.ndarray:
        return np.logical_not(self.child.evaluate_columns(columns, size))

    def variables(self) -> frozenset[int]:
        return self.child.variables()

    def substitute(self, mapping: Mapping[int, int]) -> BooleanExpr:
        child = self.child.substitute(mapping)
        if isinstance(child, Const):
            return FALSE if child.value else TRUE
        return Not(child)

    def remap(self, mapping: Mapping[int, int]) -> BooleanExpr:
        return Not(self.child.remap(mapping))

    def _text(self, names: Sequence[str]) -> tuple[str, int]:
        text, prec = self.child._text(names)
        if prec < _PREC_NOT:
            text = f"({text})"
        return f"!{text}", _PREC_NOT


@dataclass(frozen=True, slots=True)
class And(BooleanExpr):
    children: tuple[BooleanExpr, ...]

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError("And needs at least two children; use conj() to fold")

    def evaluate(self, bits: Sequence[int]) -> int:
        return 1 if all(c.evaluate(bits) for c in self.children) else 0

    def evaluate_columns(self, columns: Mapping[int, np.ndarray], size: int) -> np.ndarray:
        out = self.children[0].evaluate_columns(columns, size)
        for child in self.children[1:]:
            out = np.logical_and(out, child.evaluate_columns(columns, size))
        return out

    def variables(self) -> frozenset[int]:
        return frozenset().union(*(c.variables() for c in self.children))

    def substitute(self, mapping: Mapping[int, int]) -> BooleanExpr:
        return conj(*(c.substitute(mapping) for c in self.children))

    def remap(self, mapping: Mapping[int, int]) -> BooleanExpr:
        return And(tuple(c.remap(mapping) for c in self.children))

    def _text(self, names: Sequence[str]) -> tuple[str, int]:
        parts = []
        for child in self.children:
            text, prec = child._text(names)
            parts.append(f"({text})" if prec < _PREC_AND else text)
        return " & ".join(parts), _PREC_AND


@dataclass(frozen=True, slots=True)
class Or(BooleanExpr):
    children: tuple[BooleanExpr, ...]

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError("Or needs at least two children; use disj() to fold")

    def evaluate(self, bits: Sequence[int]) -> int:
        return 1 if any(c.evaluate(bits) for c in self.children) else 0

    def evaluate_columns(self, columns: Mapping[int, np.ndarray], size: int) -> np.ndarray:
        out = self.children[0].evaluate_columns(columns, size)
        for child in self.children[1:]:
            out = np.logical_or(out, child.evaluate_columns(columns, size))
        return out

    def variables(self) -> frozenset[int]:
        return frozenset().union(*(c.variables() for c in self.children))

    def substitute(self, mapping: Mapping[int, int]) -> BooleanExpr:
        return disj(*(c.substitute(mapping) for c in self.children))

    def remap(self, mapping: Mapping[int, int]) -> BooleanExpr:
        return Or(tuple(c.remap(mapping) for c in self.children))

    def _text(self, names: Sequence[str]) -> tuple[str, int]:
        parts = [child._text(names)[0] for child in self.children]
        return " | ".join(parts), _PREC_OR


TRUE = Const(1)
FALSE = Const(0)


def conj(*children: BooleanExpr) -> BooleanExpr:
    """Build a folded conjunction: drops 1s, short-circuits on 0, flattens nested Ands."""
    kept: list[BooleanExpr] = []
    for child in children:
        if isinstance(child, Const):
            if not child.value:
                return FALSE
            continue
        if isinstance(child, And):
            kept.extend(child.children)
        else:
            kept.append(child)
    if not kept:
        return TRUE
    if len(kept) == 1:
        return kept[0]
    return And(tuple(kept))


def disj(*children: BooleanExpr) -> BooleanExpr:
    """Build a folded disjunction: drops 0s, short-circuits on 1, flattens nested Ors."""
    kept: list[BooleanExpr] = []
    for child in children:
        if isinstance(child, Const):
            if child.value:
                return TRUE
            continue
        if isinstance(child, Or):
            kept.extend(child.children)
        else:
            kept.append(child)
    if not kept:
        return FALSE
    if len(kept) == 1:
        return kept[0]
    return Or(tuple(kept))


def literal(index: int, sign: int) -> BooleanExpr:
    """Return ``x_index`` for a positive sign and ``!x_index`` for a negative one."""
    return Var(index) if sign > 0 else Not(Var(index))


def truth_table(expr: BooleanExpr, inputs: Sequence[int]) -> np.ndarray:
    """Tabulate ``expr`` over all assignments of ``inputs``.

    Row ``r`` assigns bit ``j`` of ``r`` to ``inputs[j]``. Variables of
    ``expr`` outside ``inputs`` are read as 0.

    Returns:
        uint8 array of length ``2 ** len(inputs)``
    """
    size = 1 << len(inputs)
    rows = np.arange(size, dtype=np.int64)
    zeros = np.zeros(size, dtype=bool)
    columns: dict[int, np.ndarray] = {v: zeros for v in expr.variables()}
    for j, v in enumerate(inputs):
        columns[v] = ((rows >> j) & 1).astype(bool)
    return expr.evaluate_columns(columns, size).astype(np.uint8)
