"""Tests for fixed-point enumeration by PFVS clamping."""

from __future__ import annotations

import random

import pytest

from boolfix.constants import OrderMode, Strategy
from boolfix.errors import (
    InvalidFvsError,
    InvalidPfvsError,
    InvalidScheduleError,
    InvalidSetError,
)
from boolfix.graph.cycles import brute_tau_plus
from boolfix.graph.digraph import derive
from boolfix.models import ResultDocument
from boolfix.netgen import GenSpec, generate, random_network
from boolfix.network.network import State, is_fixed_point
from boolfix.oracle import brute_fixed_points
from boolfix.pfvs.order import compatible_order, min_order, random_compatible_order
from boolfix.solver import (
    RejectionReason,
    fixed_points,
    fixed_points_basic,
    solve,
)
from conftest import load, zero_based

EIGHT_F = zero_based(3, 4, 7)
EIGHT_P = zero_based(3)
EIGHT_PI = [v - 1 for v in (3, 1, 2, 5, 6, 8, 4, 7)]


def _strings(states: list[State]) -> list[str]:
    return [str(x) for x in states]


class TestScheduledCandidates:
    """Per-candidate diagnostics on the eight-node network."""

    def test_unique_fixed_point(self, eight_node):
        """Test that the only fixed point is 10010000."""
        report = fixed_points(eight_node, EIGHT_F, EIGHT_P, EIGHT_PI)
        assert _strings(report.fixed_points) == ["10010000"]
        assert report.candidates_tested == 2
        assert report.iterations_per_candidate == 3

    def test_zero_clamp_accepted(self, eight_node):
        """Test that x3 = 0 settles after the second pass and is accepted."""
        first = fixed_points(eight_node, EIGHT_F, EIGHT_P, EIGHT_PI).candidates[0]
        assert first.assignment == {2: 0}
        assert str(first.state) == "10010000"
        assert first.accepted and first.reason is None
        assert (first.passes, first.settled_after) == (3, 2)

    def test_one_clamp_not_fixed(self, eight_node):
        """Test that x3 = 1 ends on a state the clamped network moves."""
        second = fixed_points(eight_node, EIGHT_F, EIGHT_P, EIGHT_PI).candidates[1]
        assert second.assignment == {2: 1}
        assert str(second.state) == "00101111"
        assert not second.accepted
        assert second.reason is RejectionReason.NOT_FA_FIXED

    def test_basic_agrees(self, eight_node):
        """Test the synchronous algorithm on the same PFVS."""
        report = fixed_points_basic(eight_node, EIGHT_P)
        assert _strings(report.fixed_points) == ["10010000"]
        assert report.iterations_per_candidate == 8
        assert report.strategy is Strategy.BASIC

    def test_constructed_schedule_agrees(self, eight_node):
        """Test the deterministic compatible schedule."""
        pi = compatible_order(derive(eight_node), EIGHT_F, EIGHT_P)
        assert _strings(fixed_points(eight_node, EIGHT_F, EIGHT_P, pi).fixed_points) == [
            "10010000"
        ]


class TestSmallNetworks:
    """Hand-checked networks."""

    def test_first_variant(self, first_variant):
        """Test that an empty PFVS gives the single candidate 101."""
        report = fixed_points_basic(first_variant, ())
        assert _strings(report.fixed_points) == ["101"]
        assert report.candidates_tested == 1

    def test_second_variant(self, second_variant):
        """Test the fixed point 111 with F = {2} and the schedule (1, 3, 2)."""
        report = fixed_points(second_variant, zero_based(2), (), [0, 2, 1])
        assert _strings(report.fixed_points) == ["111"]

    def test_boundary_mismatch(self, clamp_net):
        """Test that clamping (0, 1, 0) on {1, 2, 3} is refused at the boundary."""
        report = fixed_points_basic(clamp_net, zero_based(1, 2, 3))
        candidate = next(
            c for c in report.candidates if c.assignment == {0: 0, 1: 1, 2: 0}
        )
        assert str(candidate.state) == "0101000"
        assert candidate.reason is RejectionReason.BOUNDARY_MISMATCH
        for x in report.fixed_points:
            assert is_fixed_point(clamp_net, x)

    def test_constant_network(self):
        """Test a network with no cycles at all."""
        net = load("a = 1\nb = !a\n")
        report = solve(net)
        assert _strings(report.fixed_points) == ["10"]
        assert report.P == ()


class TestErrors:
    """Invalid sets and schedules are refused before enumerating."""

    def test_p_outside_f(self, eight_node):
        """Test P = {1} with F = {3, 4, 7}."""
        with pytest.raises(InvalidSetError):
            fixed_points(eight_node, EIGHT_F, zero_based(1), EIGHT_PI)

    def test_not_an_fvs(self, eight_node):
        """Test that F = {3} leaves cycles."""
        with pytest.raises(InvalidFvsError):
            fixed_points(eight_node, EIGHT_P, EIGHT_P, EIGHT_PI)

    def test_incompatible_schedule(self, eight_node):
        """Test that P must be updated first."""
        with pytest.raises(InvalidScheduleError):
            fixed_points(eight_node, EIGHT_F, EIGHT_P, list(reversed(EIGHT_PI)))

    def test_schedule_not_a_permutation(self, eight_node):
        """Test a schedule with a repeated component."""
        with pytest.raises(InvalidScheduleError):
            fixed_points(eight_node, EIGHT_F, EIGHT_P, [2, 2, 1, 4, 5, 7, 3, 6])

    def test_index_out_of_range(self, eight_node):
        """Test P = {9} on eight components."""
        with pytest.raises(InvalidSetError):
            fixed_points_basic(eight_node, [8])

    def test_verify_rejects_bad_pfvs(self, eight_node):
        """Test that verification finds a positive cycle when P is empty."""
        with pytest.raises(InvalidPfvsError):
            fixed_points_basic(eight_node, (), verify=True)

    def test_file_mode_needs_order(self, eight_node):
        """Test that the file order mode requires an explicit order."""
        with pytest.raises(InvalidScheduleError):
            solve(eight_node, Strategy.SCHEDULED, order_mode=OrderMode.FILE)


class TestSolve:
    """End-to-end driver."""

    @pytest.mark.parametrize("strategy", list(Strategy))
    def test_every_strategy(self, eight_node, strategy):
        """Test that all strategies find 10010000."""
        report = solve(eight_node, strategy)
        assert _strings(report.fixed_points) == ["10010000"]
        assert report.strategy is strategy

    def test_pfvs_only_grows_f(self, eight_node):
        """Test that a supplied PFVS without F gets an FVS around it."""
        report = solve(eight_node, Strategy.SCHEDULED, pfvs=EIGHT_P, verify=True)
        assert set(EIGHT_P) <= set(report.F)
        assert _strings(report.fixed_points) == ["10010000"]

    def test_explicit_sets(self, eight_node):
        """Test that explicit F and P are used as given."""
        report = solve(eight_node, Strategy.SCHEDULED, pfvs=EIGHT_P, fvs=EIGHT_F)
        assert report.P == (2,)
        assert report.F == (2, 3, 6)

    def test_explicit_construction_order(self, eight_node):
        """Test that an explicit order reaches the construction."""
        order = [v - 1 for v in (3, 7, 2, 5, 1, 4, 8, 6)]
        report = solve(eight_node, Strategy.SCHEDULED, order_mode=OrderMode.FILE, order=order)
        assert report.P == (5, 7)
        assert report.order_used == tuple(order)

    def test_random_order_is_seeded(self, eight_node):
        """Test that the same seed picks the same sets."""
        first = solve(eight_node, Strategy.SCHEDULED, order_mode=OrderMode.RAND, seed=11)
        second = solve(eight_node, Strategy.SCHEDULED, order_mode=OrderMode.RAND, seed=11)
        assert (first.P, first.F) == (second.P, second.F)

    def test_auto_defaults_to_min_order(self, eight_node):
        """Test that auto without an order uses the degree heuristic."""
        report = solve(eight_node, Strategy.AUTO)
        assert report.order_used == tuple(min_order(derive(eight_node)))

    def test_auto_honours_random_order(self):
        """Test that auto with a random order follows the seed like scheduled."""
        net = generate(GenSpec(n=14, tau=5, tau_plus=4, fanin=3, seed=3)).network
        orders = set()
        for seed in range(6):
            auto = solve(net, Strategy.AUTO, order_mode=OrderMode.RAND, seed=seed)
            scheduled = solve(net, Strategy.SCHEDULED, order_mode=OrderMode.RAND, seed=seed)
            assert auto.order_used == scheduled.order_used
            assert (auto.P, auto.F) == (scheduled.P, scheduled.F)
            orders.add(auto.order_used)
        assert len(orders) > 1

    def test_auto_honours_explicit_order(self, eight_node):
        """Test that auto passes an explicit order to the construction."""
        order = [v - 1 for v in (3, 7, 2, 5, 1, 4, 8, 6)]
        report = solve(eight_node, Strategy.AUTO, order_mode=OrderMode.FILE, order=order)
        assert report.P == (5, 7)
        assert report.order_used == tuple(order)

    def test_document(self, eight_node):
        """Test the JSON document validates and omits timings unless asked."""
        report = solve(eight_node)
        doc = report.to_document(eight_node, "eight")
        assert isinstance(doc, ResultDocument)
        assert doc.fixed_points == ["10010000"]
        assert doc.timings_ms is None
        assert len(doc.schedule) == 8
        timed = report.to_document(eight_node, "eight", include_timings=True)
        assert "total" in timed.timings_ms


class TestAgainstBruteForce:
    """Both algorithms against exhaustive search."""

    def test_planted_networks(self):
        """Test 500 generated networks under both strategies and both entry points."""
        rng = random.Random(7)
        for seed in range(500):
            n = rng.randint(6, 14)
            tau = rng.randint(0, min(4, n // 2))
            spec = GenSpec(
                n=n, tau=tau, tau_plus=rng.randint(0, tau), fanin=rng.randint(1, 4), seed=seed
            )
            planted = generate(spec)
            net = planted.network
            expected = _strings(brute_fixed_points(net))

            basic = fixed_points_basic(net, planted.pfvs)
            pi = compatible_order(derive(net), planted.fvs, planted.pfvs)
            scheduled = fixed_points(net, planted.fvs, planted.pfvs, pi)
            assert _strings(basic.fixed_points) == expected, spec
            assert _strings(scheduled.fixed_points) == expected, spec
            for strategy in (Strategy.BASIC, Strategy.SCHEDULED):
                assert _strings(solve(net, strategy).fixed_points) == expected, (spec, strategy)
            assert len(expected) <= 2 ** brute_tau_plus(derive(net))[0]

    def test_arbitrary_networks(self):
        """Test the constructed PFVS on networks that need not be monotone."""
        rng = random.Random(13)
        for _ in range(150):
            net = random_network(rng.randint(1, 10), 3, rng)
            expected = _strings(brute_fixed_points(net))
            for strategy in (Strategy.BASIC, Strategy.SCHEDULED):
                report = solve(net, strategy)
                assert _strings(report.fixed_points) == expected
                assert len(expected) <= 2 ** len(report.P)

    def test_schedule_invariance(self):
        """Test that every compatible schedule yields the same fixed points."""
        rng = random.Random(21)
        for seed in range(40):
            planted = generate(GenSpec(n=10, tau=3, tau_plus=2, fanin=3, seed=seed))
            net, F, P = planted.network, planted.fvs, planted.pfvs
            graph = derive(net)
            results = {
                tuple(_strings(fixed_points(net, F, P, pi).fixed_points))
                for pi in (random_compatible_order(graph, F, P, rng) for _ in range(5))
            }
            assert len(results) == 1

    def test_passes_suffice(self):
        """Test that every accepted candidate settles within its passes."""
        planted = generate(GenSpec(n=12, tau=4, tau_plus=2, fanin=3, seed=5))
        pi = compatible_order(derive(planted.network), planted.fvs, planted.pfvs)
        report = fixed_points(planted.network, planted.fvs, planted.pfvs, pi)
        for candidate in report.candidates:
            if candidate.accepted:
                assert candidate.settled_after is not None
                assert candidate.settled_after < candidate.passes
