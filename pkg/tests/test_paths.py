from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_trees, trees
from treecover import generators as gen
from treecover.errors import PreconditionError
from treecover.graph import Tree, cover_problems, path_between, path_edges
from treecover.oracle import oracle_centroids, oracle_mincover, oracle_path_cover
from treecover.paths import (
    centroid_set,
    cover_edge_budget,
    cover_few_leaves,
    even_even_count,
    leaf_count,
    min_path_cover,
    min_path_cover_even,
    part_leaf_count,
    span_of_leaves,
)


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def _assert_centroid_path(t: Tree) -> None:
    c = centroid_set(t)
    cs = set(c)
    inner = {v: sum(1 for w in t.adj[v] if w in cs) for v in c}
    assert sum(inner.values()) == 2 * (len(c) - 1)  # connected and acyclic
    assert max(inner.values()) <= 2
    odd_internal = [v for v, k in inner.items() if k == 2 and t.degree(v) != 2]
    if t.leaf_count() % 2 == 0:
        assert odd_internal == []
    else:
        assert len(odd_internal) <= 1
        assert all(t.degree(v) == 3 for v in odd_internal)


class TestEvenEven:
    def test_path(self):
        assert even_even_count(gen.gen_path(7)) == 0

    def test_double_star(self):
        t = gen.gen_double_star(2, 2)
        assert even_even_count(t) == 1
        assert t.n == 6

    def test_star(self):
        assert even_even_count(gen.gen_star(4)) == 0


class TestMinPathCover:
    def test_examples(self):
        assert len(min_path_cover(gen.gen_path(6))) == 1
        assert len(min_path_cover(gen.gen_star(3))) == 2
        assert oracle_mincover(gen.gen_star(3), 2) == 2
        assert len(min_path_cover(gen.gen_spider([1, 2, 3, 1]))) == 2

    def test_even_examples(self):
        res = min_path_cover_even(gen.gen_double_star(2, 2))
        assert len(res) == 2 and res.total_edges == 6 and res.ee_count == 1
        for vp in res.vertex_paths:
            assert len(vp) == 4  # leaf, u, v, leaf
        res = min_path_cover_even(gen.gen_path(5))
        assert len(res) == 1 and res.total_edges == 4
        res = min_path_cover_even(gen.gen_star(4))
        assert len(res) == 2 and res.total_edges == 4

    def test_even_rejects_odd(self):
        with pytest.raises(PreconditionError, match="odd"):
            min_path_cover_even(gen.gen_star(3))

    def test_rejects_k1(self):
        with pytest.raises(PreconditionError):
            min_path_cover(Tree(1, []))

    def test_oracle_small_trees(self):
        for t in all_trees(2, 9):
            res = min_path_cover(t)
            assert len(res) == _ceil_half(t.leaf_count()) == oracle_path_cover(t)[0]

    def test_even_edge_total_is_optimal(self):
        for t in all_trees(2, 9):
            if t.leaf_count() % 2:
                continue
            res = min_path_cover_even(t)
            assert res.total_edges == t.n - 1 + even_even_count(t)
            assert oracle_path_cover(t) == (len(res), res.total_edges)

    @given(trees(2, 120))
    def test_paths_valid(self, t):
        res = min_path_cover(t)
        assert cover_problems(t, res.paths, budget=2) == []
        assert len(res) == _ceil_half(t.leaf_count())
        leaves = set(t.leaves())
        non_leaf_ends = 0
        for vp in res.vertex_paths:
            assert path_edges(t, vp)  # consecutive vertices are adjacent
            assert len(set(vp)) == len(vp)
            non_leaf_ends += (vp[0] not in leaves) + (vp[-1] not in leaves)
        assert non_leaf_ends <= t.leaf_count() % 2

    @given(trees(3, 120))
    def test_edge_budget_achieved(self, t):
        assert min_path_cover(t).total_edges <= cover_edge_budget(t)

    def test_edge_budget_tight_on_subdivided_star(self):
        t = gen.gen_subdivided_star_lb(3, 1)
        assert t.leaf_count() == 6
        assert oracle_path_cover(t) == (3, cover_edge_budget(t))
        assert cover_edge_budget(t) == 12

    def test_edge_budget_k2(self):
        k2 = gen.gen_path(2)
        assert cover_edge_budget(k2) == 0
        assert min_path_cover(k2).total_edges == 1


class TestCentroids:
    def test_examples(self):
        assert centroid_set(gen.gen_path(6)) == list(range(6))
        assert centroid_set(gen.gen_star(4)) == [0]
        assert centroid_set(gen.gen_path(2)) == [0, 1]

    def test_matches_brute_force(self):
        for t in all_trees(2, 9):
            assert centroid_set(t) == oracle_centroids(t)

    def test_three_leaves_take_every_vertex(self):
        # with three leaves no component of T - v holds more than two of them
        for t in all_trees(4, 10):
            if t.leaf_count() == 3:
                assert centroid_set(t) == list(range(t.n))
        assert centroid_set(gen.gen_star(3)) == [0, 1, 2, 3]

    @given(trees(2, 100))
    def test_connected(self, t):
        c = centroid_set(t)
        assert c
        cs = set(c)
        inner = sum(1 for v in c for w in t.adj[v] if w in cs)
        assert inner == 2 * (len(c) - 1)

    def test_induces_a_path_unless_three_leaves(self):
        for t in all_trees(2, 12):
            if t.leaf_count() == 3:
                continue
            _assert_centroid_path(t)

    @given(trees(2, 100))
    def test_induces_a_path_random(self, t):
        if t.leaf_count() != 3:
            _assert_centroid_path(t)

    @settings(max_examples=60)
    @given(trees(3, 60), st.randoms(use_true_random=False))
    def test_common_vertex_paths_cover_everything(self, t, rnd):
        # Paths through a common vertex that reach every leaf cover every edge.
        v = rnd.randrange(t.n)
        leaves = [x for x in t.leaves() if x != v]
        covered: set[int] = set()
        for leaf in leaves:
            other = rnd.choice(t.leaves())
            route = path_between(t, leaf, v)
            tail = path_between(t, v, other)
            if set(route) & set(tail[1:]):
                tail = [v]
            covered.update(path_edges(t, route + tail[1:]))
        assert covered == set(range(t.m))


class TestSpan:
    def test_two_leaves_of_path(self):
        assert span_of_leaves(gen.gen_path(5), [0, 4]) == [0, 1, 2, 3]

    def test_three_star_leaves(self):
        assert span_of_leaves(gen.gen_star(4), [1, 2, 4]) == [0, 1, 3]

    @given(trees(3, 60))
    def test_all_leaves_give_tree(self, t):
        assert span_of_leaves(t, t.leaves()) == list(range(t.m))

    def test_rejects(self):
        with pytest.raises(PreconditionError):
            span_of_leaves(gen.gen_path(4), [0])
        with pytest.raises(PreconditionError, match="not leaves"):
            span_of_leaves(gen.gen_path(4), [0, 1])


class TestFewLeaves:
    def test_star6(self):
        t = gen.gen_star(6)
        cover = cover_few_leaves(t, 3)
        assert len(cover) == 2
        assert all(part_leaf_count(t, p) == 3 for p in cover.parts)

    def test_few_leaves_is_whole_tree(self):
        t = gen.gen_spider([2, 1, 3])
        assert cover_few_leaves(t, 3).parts == (tuple(range(t.m)),)
        assert cover_few_leaves(t, 5).parts == (tuple(range(t.m)),)

    def test_d2_matches_path_cover(self):
        for t in all_trees(2, 9):
            assert len(cover_few_leaves(t, 2)) == len(min_path_cover(t))

    @given(trees(2, 120), st.integers(2, 7))
    def test_valid(self, t, d):
        cover = cover_few_leaves(t, d)
        assert cover_problems(t, cover) == []
        assert len(cover) == -(-leaf_count(t) // d)
        assert all(part_leaf_count(t, p) <= d for p in cover.parts)
