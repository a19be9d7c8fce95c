"""Vertex covers, twin partitions, cover classes, representative edges."""

import random

import pytest

from cak import (
    ColoredGraph,
    VertexCover,
    equivalence_classes,
    gen_lower_vc,
    gen_random,
    min_vertex_cover,
    nd_partition,
    representative_edges,
)
from cak.params import as_cover

from _oracles import build, exhaustive_min_cover_size, random_lettered_edges


def _is_cover(g, vertices):
    return all(u in vertices or v in vertices for u, v, _ in g.edges)


def test_min_cover_small_cases():
    assert min_vertex_cover(build(2, [(0, 1, "g")])).size == 1
    c4 = build(4, [(0, 1, "g"), (1, 2, "g"), (2, 3, "g"), (0, 3, "g")])
    assert min_vertex_cover(c4).size == 2
    star = build(51, [(0, i, "g") for i in range(1, 51)])
    assert min_vertex_cover(star).vertices == frozenset({0})
    p4 = build(4, [(0, 1, "g"), (1, 2, "g"), (2, 3, "g")])
    assert min_vertex_cover(p4).size == 2
    assert min_vertex_cover(ColoredGraph(5, ())).size == 0


def test_min_cover_lower_vc_4():
    cover = min_vertex_cover(gen_lower_vc(4))
    assert cover.size == 4
    assert cover.vertices == frozenset({0, 1, 2, 3})


def test_min_cover_matches_exhaustive():
    rng = random.Random(101)
    for case in range(60):
        n = rng.randrange(11)
        edges = random_lettered_edges(rng, n, rng.choice([0.2, 0.4, 0.7]))
        g = build(n, edges)
        cover = min_vertex_cover(g)
        assert _is_cover(g, cover.vertices)
        assert cover.size == exhaustive_min_cover_size(n, [e[:2] for e in edges])


def test_min_cover_deterministic():
    g = gen_random(10, 0.5, seed=5)
    assert min_vertex_cover(g).vertices == min_vertex_cover(g).vertices


def test_nd_partition_k3():
    k3 = build(3, [(0, 1, "g"), (0, 2, "g"), (1, 2, "g")])
    part = nd_partition(k3)
    assert part.modules == ((0, 1, 2),)
    assert part.kind == "colored-twin"


def test_nd_partition_p3():
    p3 = build(3, [(0, 1, "g"), (1, 2, "g")])
    assert nd_partition(p3).modules == ((0, 2), (1,))


def test_nd_partition_respects_colors():
    # mixed-color triangle: no two vertices agree toward the third
    k3 = build(3, [(0, 1, "g"), (0, 2, "b"), (1, 2, "w")])
    assert nd_partition(k3).count == 3
    assert nd_partition(k3, ignore_colors=True).count == 1
    assert nd_partition(k3, ignore_colors=True).kind == "twin"


def test_nd_partition_star_by_leaf_color():
    star = build(5, [(0, 1, "g"), (0, 2, "g"), (0, 3, "b"), (0, 4, "b")])
    assert nd_partition(star).modules == ((0,), (1, 2), (3, 4))
    assert nd_partition(star, ignore_colors=True).modules == ((0,), (1, 2, 3, 4))


def test_nd_partition_isolated_and_empty():
    assert nd_partition(ColoredGraph(0, ())).count == 0
    assert nd_partition(ColoredGraph(3, ())).modules == ((0, 1, 2),)
    g = build(4, [(0, 1, "g")], alive=0b0111)  # vertex 3 dead, 2 isolated
    assert nd_partition(g).modules == ((0, 1), (2,))


def test_nd_partition_modules_are_pairwise_twins():
    def twins(g, u, v):
        return all(
            g.color_of(u, w) is g.color_of(v, w)
            for w in range(g.n)
            if w not in (u, v)
        )

    rng = random.Random(55)
    for _ in range(30):
        g = build(8, random_lettered_edges(rng, 8, 0.5))
        for module in nd_partition(g).modules:
            for i, u in enumerate(module):
                for v in module[i + 1 :]:
                    assert twins(g, u, v)


def test_nd_bound_by_cover_for_gray_graphs():
    # module count is at most 2^tau + tau on gray graphs
    rng = random.Random(77)
    for _ in range(30):
        g = build(9, random_lettered_edges(rng, 9, rng.random(), "g"))
        tau = min_vertex_cover(g).size
        assert nd_partition(g).count <= 2**tau + tau


def test_equivalence_classes_single_black_edge():
    g = build(2, [(0, 1, "b")])
    classes = equivalence_classes(g, cover={0})
    assert classes.cover_order == (0,)
    assert classes.classes == {(2,): (1,)}
    assert classes.representative((2,)) == 1


def test_equivalence_classes_star():
    star = build(4, [(0, 1, "g"), (0, 2, "g"), (0, 3, "g")])
    classes = equivalence_classes(star, cover={0})
    assert classes.classes == {(1,): (1, 2, 3)}


def test_equivalence_classes_lower_vc_2():
    g = gen_lower_vc(2)
    classes = equivalence_classes(g, cover={0, 1})
    assert len(classes.classes) == 4  # one class per base-4 pattern
    assert all(len(members) == 1 for members in classes.classes.values())
    vectors = set(classes.classes)
    assert vectors == {(0, 2), (1, 2), (2, 2), (3, 2)}


def test_equivalence_classes_respect_alive_mask():
    star = build(4, [(0, 1, "g"), (0, 2, "g"), (0, 3, "g")])
    classes = equivalence_classes(star, alive=0b0101, cover={0})
    assert classes.classes == {(1,): (2,)}
    with pytest.raises(ValueError):
        equivalence_classes(star, alive=0b11111)


def test_equivalence_classes_need_a_cover():
    p3 = build(3, [(0, 1, "g"), (1, 2, "g")])
    with pytest.raises(ValueError):
        equivalence_classes(p3, cover={0})


def test_representative_edges_examples():
    star = build(4, [(0, 1, "g"), (0, 2, "g"), (0, 3, "g")])
    assert representative_edges(star, cover={0}) == {(0, 1)}
    black = build(2, [(0, 1, "b")])
    assert representative_edges(black, cover={0}) == {(0, 1)}
    c4 = build(4, [(0, 1, "g"), (1, 2, "g"), (2, 3, "g"), (0, 3, "g")])
    # one class {1, 3} with representative 1, adjacent to both cover ends
    assert representative_edges(c4, cover={0, 2}) == {(0, 1), (1, 2)}


def test_as_cover_normalizes_and_validates():
    g = build(3, [(0, 1, "g"), (1, 2, "g")])
    assert as_cover(g, [1]) == frozenset({1})
    assert as_cover(g, VertexCover(frozenset({0, 1}))) == frozenset({0, 1})
    with pytest.raises(ValueError):
        as_cover(g, [0])
    with pytest.raises(ValueError):
        as_cover(g, [7])
