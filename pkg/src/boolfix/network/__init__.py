"""Boolean network core: expressions, states, evaluation and the fixing chain."""

from .expr import FALSE, TRUE, And, BooleanExpr, Const, Not, Or, Var, conj, disj, literal
from .ichain import ChainLevel, IChain, compute_i_chain, level_order, reduce_by_chain
from .network import (
    BooleanNetwork,
    Component,
    Schedule,
    State,
    apply,
    apply_partial,
    apply_schedule,
    eval_local,
    is_fixed_point,
    iterate,
    restrict,
    schedule_trace,
    sweep,
)

__all__ = [
    # Expressions
    "BooleanExpr",
    "Const",
    "Var",
    "Not",
    "And",
    "Or",
    "TRUE",
    "FALSE",
    "conj",
    "disj",
    "literal",
    # Networks
    "BooleanNetwork",
    "Component",
    "State",
    "Schedule",
    "eval_local",
    "apply",
    "apply_partial",
    "apply_schedule",
    "iterate",
    "is_fixed_point",
    "restrict",
    "schedule_trace",
    "sweep",
    # Fixing chain
    "ChainLevel",
    "IChain",
    "compute_i_chain",
    "reduce_by_chain",
    "level_order",
]
