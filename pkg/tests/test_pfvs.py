"""Tests for the PFVS construction and the schedule orders."""

from __future__ import annotations

import random

import pytest

from boolfix.errors import InvalidFvsError, InvalidPfvsError, InvalidScheduleError, InvalidSetError
from boolfix.graph.cycles import is_acyclic, is_minimal_fvs, is_pfvs
from boolfix.graph.digraph import SignedDigraph, degrees, derive
from boolfix.netgen import random_signed_digraph
from boolfix.network.network import Schedule
from boolfix.pfvs.algorithm import (
    PfvsOutput,
    best_random_pfvs,
    pfvs_algorithm,
    verify_pfvs_output,
)
from boolfix.pfvs.order import (
    compatible_order,
    complete_fvs,
    is_compatible,
    min_order,
    random_compatible_order,
    random_order,
)
from conftest import one_based, zero_based


def _order(*one_based_labels: int) -> list[int]:
    return [v - 1 for v in one_based_labels]


class TestPfvsAlgorithm:
    """Construction of P and O."""

    def test_eight_node_trace(self, eight_node):
        """Test order (3,7,2,5,1,4,8,6) gives P={6,8}, O={1,4} in two phases."""
        out = pfvs_algorithm(derive(eight_node), _order(3, 7, 2, 5, 1, 4, 8, 6))
        assert one_based(out.P) == [6, 8]
        assert one_based(out.O) == [1, 4]
        assert one_based(out.F) == [1, 4, 6, 8]
        assert out.phases == 2
        assert out.order_used == tuple(_order(3, 7, 2, 5, 1, 4, 8, 6))

    def test_positive_loops_enter_p(self, five_node):
        """Test that vertices with a positive loop are in P whatever the order."""
        graph = derive(five_node)
        rng = random.Random(1)
        for _ in range(10):
            out = pfvs_algorithm(graph, random_order(graph, rng))
            assert zero_based(3, 4) <= out.P

    def test_acyclic_graph(self):
        """Test that an acyclic graph needs nothing."""
        graph = SignedDigraph.from_arcs(3, [(0, 1, 1), (1, 2, -1)])
        out = pfvs_algorithm(graph, [0, 1, 2])
        assert out.P == frozenset() and out.F == frozenset()
        assert out.R == frozenset({0, 1, 2})

    def test_negative_loop_goes_to_o(self):
        """Test that a lone negative loop lands in O, not P."""
        graph = SignedDigraph.from_arcs(2, [(0, 0, -1), (0, 1, 1)])
        for order in ([0, 1], [1, 0]):
            out = pfvs_algorithm(graph, order)
            assert out.P == frozenset()
            assert out.O == frozenset({0})
            assert out.phases == 2

    def test_rejects_bad_order(self, eight_node):
        """Test that the order must be a permutation of the vertices."""
        with pytest.raises(InvalidScheduleError):
            pfvs_algorithm(derive(eight_node), [0, 1, 2])

    def test_best_random_pfvs_is_valid(self, eight_node):
        """Test the random-restart heuristic keeps a valid minimal result."""
        graph = derive(eight_node)
        out = best_random_pfvs(graph, random.Random(4))
        assert is_pfvs(graph, out.P)
        assert is_minimal_fvs(graph, out.F)
        assert len(out.P) >= 1

    def test_verify_rejects_bad_output(self, eight_node):
        """Test post-hoc verification of a forged result."""
        graph = derive(eight_node)
        forged = PfvsOutput(frozenset(), frozenset(), frozenset(graph.vertices), 1, ())
        with pytest.raises(InvalidPfvsError):
            verify_pfvs_output(graph, forged)
        not_minimal = PfvsOutput(
            zero_based(6, 8), zero_based(1, 2, 4), frozenset(graph.vertices), 2, ()
        )
        with pytest.raises(InvalidFvsError):
            verify_pfvs_output(graph, not_minimal)


class TestMinOrder:
    """Degree heuristic."""

    def test_seven_vertex_key_groups(self, seven_graph):
        """Test keys are non-decreasing and group as {5} < {3,7} < {2,4,6} < {1}."""
        order = min_order(seven_graph)
        table = degrees(seven_graph)
        keys = [(table[v][2], table[v][0]) for v in order]
        assert keys == sorted(keys)
        groups: dict[tuple[int, int], set[int]] = {}
        for v, key in zip(order, keys):
            groups.setdefault(key, set()).add(v + 1)
        assert [groups[key] for key in sorted(groups)] == [{5}, {3, 7}, {2, 4, 6}, {1}]

    def test_ties_by_index(self, seven_graph):
        """Test ascending index inside a key group."""
        assert [v + 1 for v in min_order(seven_graph)] == [5, 3, 7, 2, 4, 6, 1]


class TestCompatibleOrders:
    """Schedules compatible with F and P."""

    @pytest.mark.parametrize(
        "order",
        [(3, 1, 5, 7, 6, 2, 4), (1, 3, 7, 6, 5, 2, 4), (3, 1, 7, 5, 6, 4, 2)],
    )
    def test_listed_orders_accepted(self, seven_graph, order):
        """Test the three listed orders for P={1,3}, F={1,2,3,4}."""
        assert is_compatible(seven_graph, zero_based(1, 2, 3, 4), zero_based(1, 3), _order(*order))

    def test_reversed_order_rejected(self, seven_graph):
        """Test that P must come first."""
        order = _order(*reversed((3, 1, 5, 7, 6, 2, 4)))
        assert not is_compatible(seven_graph, zero_based(1, 2, 3, 4), zero_based(1, 3), order)

    def test_middle_must_be_topological(self, seven_graph):
        """Test that 6 before 7 breaks the arc 7 -> 6."""
        order = _order(3, 1, 5, 6, 7, 2, 4)
        assert not is_compatible(seven_graph, zero_based(1, 2, 3, 4), zero_based(1, 3), order)

    def test_constructed_order(self, seven_graph):
        """Test the deterministic construction."""
        F, P = zero_based(1, 2, 3, 4), zero_based(1, 3)
        pi = compatible_order(seven_graph, F, P)
        assert is_compatible(seven_graph, F, P, pi)
        assert [v + 1 for v in pi.order] == [1, 3, 5, 7, 6, 2, 4]

    def test_random_compatible_orders(self, seven_graph):
        """Test every drawn order is compatible."""
        F, P = zero_based(1, 2, 3, 4), zero_based(1, 3)
        rng = random.Random(2)
        for _ in range(20):
            assert is_compatible(seven_graph, F, P, random_compatible_order(seven_graph, F, P, rng))

    def test_p_outside_f(self, seven_graph):
        """Test that P must be a subset of F."""
        with pytest.raises(InvalidSetError):
            compatible_order(seven_graph, zero_based(1, 2), zero_based(1, 3))

    def test_f_not_fvs(self, seven_graph):
        """Test that G - F must be acyclic."""
        with pytest.raises(InvalidFvsError):
            compatible_order(seven_graph, zero_based(1, 3), zero_based(1, 3))

    def test_schedule_object_accepted(self, seven_graph):
        """Test is_compatible with a Schedule."""
        pi = Schedule(tuple(_order(3, 1, 5, 7, 6, 2, 4)))
        assert is_compatible(seven_graph, zero_based(1, 2, 3, 4), zero_based(1, 3), pi)


class TestCompleteFvs:
    """Growing an FVS around a given PFVS."""

    def test_contains_p_and_is_minimal_above_it(self, eight_node):
        """Test that no vertex outside P can be dropped."""
        graph = derive(eight_node)
        P = zero_based(3)
        F = complete_fvs(graph, P, min_order(graph))
        assert P <= F
        assert is_acyclic(graph, F)
        for v in F - P:
            assert not is_acyclic(graph, F - {v})


class TestValiditySweep:
    """Random signed digraphs under the degree order and random orders."""

    def test_outputs_are_valid(self):
        """Test P is a PFVS and F a minimal FVS on 300 graphs x 11 orders."""
        rng = random.Random(2024)
        for _ in range(300):
            n = rng.randint(1, 16)
            graph = random_signed_digraph(n, min(1.0, 1.6 / n), rng)
            orders = [min_order(graph)] + [random_order(graph, rng) for _ in range(10)]
            for order in orders:
                out = pfvs_algorithm(graph, order)
                assert is_pfvs(graph, out.P), (sorted(graph.arcs), order)
                assert is_minimal_fvs(graph, out.F), (sorted(graph.arcs), order)
                assert out.P | out.R == graph.vertices
                assert not out.P & out.O
