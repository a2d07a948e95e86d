"""Signed interaction graphs and their cycle structure."""

from .cycles import (
    SignedCycle,
    brute_tau,
    brute_tau_plus,
    enumerate_cycles,
    find_positive_cycle,
    is_acyclic,
    is_minimal_fvs,
    is_pfvs,
    positive_cycles,
)
from .digraph import SignedDigraph, degrees, derive

__all__ = [
    "SignedDigraph",
    "SignedCycle",
    "derive",
    "degrees",
    "enumerate_cycles",
    "positive_cycles",
    "find_positive_cycle",
    "is_acyclic",
    "is_pfvs",
    "is_minimal_fvs",
    "brute_tau",
    "brute_tau_plus",
]
