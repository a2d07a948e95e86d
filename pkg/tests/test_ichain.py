"""Tests for the constant-propagation chain and the reduced networks."""

from __future__ import annotations

import random
from itertools import product

from boolfix.netgen import random_network
from boolfix.network.ichain import compute_i_chain, level_order, reduce_by_chain
from boolfix.network.network import State, apply, apply_schedule, iterate, restrict
from conftest import one_based, zero_based


def test_chain_net_chain_levels(chain_net):
    """Test I_1 = {4,5}, I_2 = {1,4,5}, I_3 = {1,4,5,6,7}, stationary at k = 3."""
    chain = compute_i_chain(chain_net)
    assert chain.k_star == 3
    assert [one_based(level.members) for level in chain.levels] == [
        [4, 5],
        [1, 4, 5],
        [1, 4, 5, 6, 7],
    ]
    constants = {v + 1: c for v, c in chain.constants.items()}
    assert constants == {1: 1, 4: 1, 5: 0, 6: 1, 7: 1}
    assert not chain.covers(chain_net.n)


def test_chain_net_reduced_network(chain_net):
    """Test f^{I_3}: f2 = !x2 & x3, f3 = !x3, every other component constant."""
    chain = compute_i_chain(chain_net)
    reduced = reduce_by_chain(chain_net, chain, 3)
    for v in zero_based(1, 4, 5, 6, 7):
        assert reduced.components[v].is_constant
    assert reduced.support(1) == (1, 2)
    assert reduced.support(2) == (2,)
    for x2, x3 in product((0, 1), repeat=2):
        x = State((1, x2, x3, 1, 0, 1, 1))
        assert reduced.components[1].local(x.bits) == int(not x2 and x3)
        assert reduced.components[2].local(x.bits) == int(not x3)


def test_chain_net_coordinates_settle(chain_net):
    """Test that after three synchronous steps the fixed coordinates hold their constants."""
    for value in range(1 << chain_net.n):
        y = iterate(chain_net, 3, State.from_int(value, chain_net.n))
        assert (y[0], y[3], y[4], y[5], y[6]) == (1, 1, 0, 1, 1)


def test_reduce_level_zero_is_identity(chain_net):
    """Test that k = 0 returns the network unchanged."""
    chain = compute_i_chain(chain_net)
    assert reduce_by_chain(chain_net, chain, 0) is chain_net


def test_first_variant_chain_covers(first_variant):
    """Test I_1 = {1} < I_2 = {1,2} < I_3 = {1,2,3}."""
    chain = compute_i_chain(first_variant)
    assert [one_based(level.members) for level in chain.levels] == [[1], [1, 2], [1, 2, 3]]
    assert chain.covers(3)
    assert chain.level_of(2) == 3


def test_level_order_one_sweep(first_variant):
    """Test that the level order reaches the fixed point in one sweep from every start."""
    pi = level_order(compute_i_chain(first_variant), 3)
    for bits in product((0, 1), repeat=3):
        assert str(apply_schedule(first_variant, pi, State(bits))) == "101"


def test_clamp_net_clamped_chain(clamp_net):
    """Test that clamping P = {1,2,3} puts them and x5 in the first level."""
    fa = restrict(clamp_net, {0: 0, 1: 1, 2: 0})
    chain = compute_i_chain(fa)
    assert zero_based(1, 2, 3, 5) <= chain.levels[0].members


def _random_networks(seed: int, count: int, max_n: int):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_network(rng.randint(1, max_n), 3, rng)


def test_levels_strictly_nested():
    """Test that each level contains the previous one and keeps its constants."""
    for net in _random_networks(31, 200, 12):
        chain = compute_i_chain(net)
        for lower, upper in zip(chain.levels, chain.levels[1:]):
            assert lower.members < upper.members
            assert upper.constants.items() >= lower.constants.items()
        for level in chain.levels:
            assert set(level.constants) == level.members


def test_chain_stationary_after_last_level():
    """Test that substituting the last level fixes nothing new."""
    for net in _random_networks(37, 200, 12):
        chain = compute_i_chain(net)
        again = compute_i_chain(reduce_by_chain(net, chain, chain.k_star))
        assert again.fixed == chain.fixed
        assert again.constants == chain.constants
        assert again.k_star == min(chain.k_star, 1)


def test_no_constant_component_means_empty_chain():
    """Test that the chain is empty exactly when no local function is constant."""
    seen_empty = False
    for net in _random_networks(41, 200, 8):
        chain = compute_i_chain(net)
        has_constant = any(comp.is_constant for comp in net.components)
        assert (chain.k_star > 0) == has_constant
        seen_empty = seen_empty or not has_constant
    assert seen_empty


def test_fixed_coordinates_settle_on_random_networks():
    """Test that a member of level k holds its constant from step k on, from every state."""
    for net in _random_networks(43, 40, 10):
        chain = compute_i_chain(net)
        for value in range(1 << net.n):
            y = State.from_int(value, net.n)
            for t in range(1, chain.k_star + 2):
                y = apply(net, y)
                for level in chain.levels[:t]:
                    for v, c in level.constants.items():
                        assert y[v] == c, (t, v)
