"""Subset engine: bitmask memo vs the naive reference."""

import random

import pytest

from cak import (
    CapacityError,
    ColoredGraph,
    Player,
    count_subset_positions,
    gen_grid,
    solve_naive,
    solve_subset,
)

from _oracles import build, random_lettered_edges


def test_matches_naive_on_random_instances():
    rng = random.Random(90)
    for case in range(60):
        n = rng.randrange(9)
        letters = rng.choice(["g", "gbw", "bw"])
        g = build(n, random_lettered_edges(rng, n, rng.choice([0.3, 0.6]), letters))
        for turn in (Player.B, Player.W):
            assert solve_subset(g, turn).winner is solve_naive(g, turn).winner


def test_cram_2x3_first_player_wins():
    assert solve_subset(gen_grid(2, 3), Player.B).winner is Player.B


def test_empty_graph():
    out = solve_subset(ColoredGraph(4, ()), Player.W)
    assert out.winner is Player.B
    assert out.stats.node_expansions == 1


def test_capacity_guard():
    path = build(33, [(i, i + 1, "g") for i in range(32)])
    with pytest.raises(CapacityError):
        solve_subset(path, Player.B)
    assert solve_subset(path, Player.B, max_n=40).winner is Player.B


def test_single_edge_key_count():
    stats = count_subset_positions(build(2, [(0, 1, "g")]), Player.B)
    assert stats.distinct_keys <= 4


def test_key_space_bounds():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randrange(1, 9)
        g = build(n, random_lettered_edges(rng, n, 0.5))
        stats = count_subset_positions(g, Player.B)
        assert stats.distinct_keys <= 2 ** (n + 1)
        assert stats.distinct_keys <= stats.node_expansions + 1
        assert stats.memo_hits <= stats.node_expansions
        assert stats.elapsed >= 0.0


def test_p4_key_bound():
    p4 = build(4, [(0, 1, "g"), (1, 2, "g"), (2, 3, "g")])
    assert count_subset_positions(p4, Player.B).distinct_keys <= 32


def test_winning_move_contract():
    rng = random.Random(23)
    for _ in range(30):
        g = build(7, random_lettered_edges(rng, 7, 0.5))
        for turn in (Player.B, Player.W):
            out = solve_subset(g, turn)
            if out.winner is turn:
                u, v = out.winning_move
                assert turn.can_play(g.color_of(u, v))
                child = g.alive & ~(1 << u | 1 << v)
                assert solve_naive(g, turn.opponent, child).winner is turn
            else:
                assert out.winning_move is None


def test_deterministic_outcome():
    g = build(8, random_lettered_edges(random.Random(3), 8, 0.5))
    a = solve_subset(g, Player.B)
    b = solve_subset(g, Player.B)
    assert (a.winner, a.winning_move) == (b.winner, b.winning_move)
    assert a.stats.node_expansions == b.stats.node_expansions
