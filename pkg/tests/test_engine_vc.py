"""Cover-keyed engine: soundness, key merging, move restriction."""

import random

import pytest

from cak import (
    Player,
    count_vc_positions,
    gen_lower_vc,
    min_vertex_cover,
    permute,
    representative_edges,
    solve_naive,
    solve_subset,
    solve_vc,
    vc_canonical_key,
)

from _oracles import build, random_lettered_edges


def reachable_positions(g, turn):
    """All (mask, player) pairs reachable by alternating play."""
    start = (g.alive, turn)
    seen = {start}
    frontier = [start]
    while frontier:
        mask, player = frontier.pop()
        for u, v, c in g.edges:
            em = 1 << u | 1 << v
            if mask & em == em and player.can_play(c):
                child = (mask & ~em, player.opponent)
                if child not in seen:
                    seen.add(child)
                    frontier.append(child)
    return seen


def vc_layout(g, cover, mask):
    """Independent reconstruction of the key layout: surviving non-
    isolated cover vertices and non-cover classes by color vector."""
    nbr = g.neighbor_masks()
    alive_cover = tuple(
        s for s in sorted(cover) if mask >> s & 1 and nbr[s] & mask
    )
    classes = {}
    for v in range(g.n):
        if v in cover or not mask >> v & 1:
            continue
        vec = tuple(
            0 if g.color_of(v, u) is None else int(g.color_of(v, u))
            for u in alive_cover
        )
        if any(vec):
            classes.setdefault(vec, []).append(v)
    return alive_cover, classes


def test_matches_subset_on_random_instances():
    rng = random.Random(404)
    for case in range(50):
        n = rng.randrange(10)
        letters = rng.choice(["g", "gbw", "bw"])
        g = build(n, random_lettered_edges(rng, n, rng.choice([0.3, 0.6]), letters))
        for turn in (Player.B, Player.W):
            assert solve_vc(g, turn).winner is solve_subset(g, turn).winner


def test_accepts_non_minimal_covers():
    rng = random.Random(77)
    for _ in range(20):
        g = build(7, random_lettered_edges(rng, 7, 0.5))
        want = solve_subset(g, Player.B).winner
        assert solve_vc(g, Player.B, cover=range(7)).winner is want
        bigger = set(min_vertex_cover(g).vertices)
        for v in range(7):
            if v not in bigger:
                bigger.add(v)
                break
        assert solve_vc(g, Player.B, cover=bigger).winner is want


def test_rejects_non_covers():
    p3 = build(3, [(0, 1, "g"), (1, 2, "g")])
    with pytest.raises(ValueError):
        solve_vc(p3, Player.B, cover={0})
    with pytest.raises(ValueError):
        solve_vc(p3, Player.B, cover={99})


def test_star_k1_50_collapses():
    star = build(51, [(0, i, "g") for i in range(1, 51)])
    for turn in (Player.B, Player.W):
        out = solve_vc(star, turn)
        assert out.winner is turn  # one move kills the center, game over
        assert out.stats.distinct_keys <= 8


def test_lower_vc_2_winner_and_expansion_floor():
    g = gen_lower_vc(2)
    for turn in (Player.B, Player.W):
        assert solve_vc(g, turn).winner is solve_naive(g, turn).winner
    stats = count_vc_positions(g, Player.B)
    assert stats.node_expansions >= 4  # 2^(k*k/2) for k=2


def test_single_edge_key_count():
    stats = count_vc_positions(build(2, [(0, 1, "g")]), Player.B)
    assert stats.distinct_keys <= 4


def test_fresh_star_key_shape():
    star = build(4, [(0, 1, "g"), (0, 2, "g"), (0, 3, "g")])
    key = vc_canonical_key(star, None, {0}, Player.B)
    assert key == ((0,), (((1,), 3),), Player.B)


def test_key_invariant_under_noncover_relabeling():
    g = build(5, [(0, 1, "g"), (0, 2, "g"), (0, 3, "b"), (0, 4, "w")])
    # permute only the non-cover vertices; the key must not move
    perm = [0, 3, 4, 2, 1]
    h = permute(g, perm)
    key_g = vc_canonical_key(g, None, {0}, Player.W)
    key_h = vc_canonical_key(h, None, {0}, Player.W)
    assert key_g == key_h


def test_equal_keys_mean_isomorphic_positions():
    """Positions sharing a key are related by a class-preserving
    bijection on their non-isolated vertices; build it and check it."""
    rng = random.Random(909)
    merged_groups = 0
    for case in range(25):
        n = rng.randrange(4, 10)
        g = build(n, random_lettered_edges(rng, n, 0.5))
        cover = min_vertex_cover(g).vertices
        groups = {}
        for mask, player in reachable_positions(g, Player.B):
            key = vc_canonical_key(g, mask, cover, player)
            groups.setdefault(key, []).append(mask)
        for key, masks in groups.items():
            if len(masks) < 2:
                continue
            merged_groups += 1
            base = masks[0]
            ac0, cl0 = vc_layout(g, cover, base)
            for other in masks[1:3]:
                ac1, cl1 = vc_layout(g, cover, other)
                assert ac0 == ac1
                assert sorted((v, len(m)) for v, m in cl0.items()) == sorted(
                    (v, len(m)) for v, m in cl1.items()
                )
                phi = {s: s for s in ac0}
                for vec, members in cl0.items():
                    phi.update(zip(members, cl1[vec]))
                dom = sorted(phi)
                for i, a in enumerate(dom):
                    for b in dom[i + 1 :]:
                        assert g.color_of(a, b) is g.color_of(phi[a], phi[b])
    assert merged_groups > 0  # the property was actually exercised


def test_restricted_moves_reach_every_child_key():
    """Cover-internal plus representative edges produce exactly the same
    set of child keys as the full playable move set."""
    rng = random.Random(313)
    for case in range(20):
        n = rng.randrange(3, 10)
        g = build(n, random_lettered_edges(rng, n, 0.5))
        cover = min_vertex_cover(g).vertices
        for mask, player in reachable_positions(g, Player.B):
            full, restricted = set(), set()
            rep = representative_edges(g, alive=mask, cover=cover)
            for u, v, c in g.edges:
                em = 1 << u | 1 << v
                if mask & em != em or not player.can_play(c):
                    continue
                child = vc_canonical_key(g, mask & ~em, cover, player.opponent)
                full.add(child)
                if (u in cover and v in cover) or (u, v) in rep:
                    restricted.add(child)
            assert restricted == full


def test_count_mode_disables_short_circuit():
    g = build(6, random_lettered_edges(random.Random(8), 6, 0.6))
    solved = solve_vc(g, Player.B)
    counted = count_vc_positions(g, Player.B)
    assert counted.node_expansions >= solved.stats.node_expansions
    assert counted.distinct_keys <= counted.node_expansions + 1
