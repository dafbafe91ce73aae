from __future__ import annotations

import json

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import nx_graph, trees
from treecover import generators as gen
from treecover.errors import InvalidCoverError, ParseError, TreeCoverError
from treecover.graph import Graph, RootedTree, SubtreeCover, Tree, check_cover, cover_problems
from treecover.io import cover_from_json, cover_to_json, load, parse_edge_list, parse_json, serialize
from treecover.pathwidth import pathwidth


class TestParse:
    def test_path(self):
        t = parse_edge_list("0 1\n1 2")
        assert isinstance(t, Tree)
        assert t.n == 3 and t.edges == [(0, 1), (1, 2)]

    def test_star(self):
        t = parse_edge_list("0 1\n0 2\n0 3")
        assert t.degrees() == [3, 1, 1, 1]

    def test_duplicate_edge(self):
        with pytest.raises(ParseError, match="duplicate") as info:
            parse_edge_list("0 1\n1 0")
        assert info.value.line == 2

    def test_self_loop(self):
        with pytest.raises(ParseError, match="self-loop"):
            parse_edge_list("0 0")

    def test_malformed(self):
        with pytest.raises(ParseError) as info:
            parse_edge_list("0 1\n1 x")
        assert info.value.line == 2
        with pytest.raises(ParseError):
            parse_edge_list("0 1 2")
        with pytest.raises(ParseError, match="negative"):
            parse_edge_list("0 -1")

    def test_comments_and_blanks(self):
        t = parse_edge_list("# a path\n\n0 1  # first\n\n1 2\n")
        assert t.m == 2

    def test_cycle_is_graph_unless_tree_demanded(self):
        g = parse_edge_list("0 1\n1 2\n2 0")
        assert type(g) is Graph
        with pytest.raises(ParseError, match="cycle") as info:
            parse_edge_list("0 1\n1 2\n2 0", "tree")
        assert info.value.line == 3

    def test_disconnected_tree_rejected(self):
        with pytest.raises(ParseError, match="disconnected"):
            parse_edge_list("0 1\n2 3", "tree")

    def test_relabels_sparse_ids(self):
        t = parse_edge_list("10 20\n20 35")
        assert t.n == 3 and t.labels == [10, 20, 35]
        assert t.edges == [(0, 1), (1, 2)]

    def test_single_vertex(self):
        t = parse_edge_list("0")
        assert isinstance(t, Tree) and t.n == 1 and t.m == 0

    def test_json(self):
        g, root = parse_json('{"n": 3, "edges": [[0, 1], [1, 2]], "root": 1}')
        assert isinstance(g, Tree) and root == 1
        with pytest.raises(ParseError):
            parse_json('{"edges": [[0, 1, 2]]}')
        with pytest.raises(ParseError):
            parse_json('{"n": 2, "edges": [[0, 1]], "root": 5}')
        with pytest.raises(ParseError):
            parse_json("{not json")


class TestSerialize:
    def test_p3_edge_list(self):
        assert serialize(gen.gen_path(3)) == "0 1\n1 2"

    def test_k2_partition_json(self):
        k2 = gen.gen_path(2)
        cover = SubtreeCover.build(k2, [[0]], "partition", d=2)
        data = json.loads(cover_to_json(cover))
        assert data == {"d": 2, "kind": "partition", "parts": [[0]]}
        assert cover_from_json(cover_to_json(cover), k2) == cover

    def test_dot_colours_parts(self):
        t = gen.gen_path(3)
        cover = SubtreeCover.build(t, [[0], [1]])
        dot = serialize(t, "dot", cover=cover)
        assert "color=red" in dot and "color=blue" in dot

    def test_k1_roundtrip(self):
        k1 = Tree(1, [])
        assert load(serialize(k1))[0] == k1

    @pytest.mark.parametrize("fmt", ["edge-list", "json"])
    @pytest.mark.parametrize(
        "graph",
        [
            gen.gen_path(5),
            gen.gen_star(4),
            gen.gen_spider([1, 2, 3]),
            gen.gen_caterpillar([2, 0, 3]),
            gen.gen_double_star(2, 3),
            gen.gen_complete_unrooted(3, 2),
            gen.gen_complete_rooted(2, 3).tree,
            gen.gen_caterpillar_lb(5, 4),
            gen.gen_pw_lb_rooted(4, 3, 1).tree,
            gen.gen_pw_lb_unrooted(4, 3, 1, 2),
            gen.gen_subdivided_star_lb(3, 2),
            gen.gen_arms(1),
        ],
        ids=lambda g: f"{type(g).__name__}{g.n}",
    )
    def test_roundtrip_generators(self, graph, fmt):
        back, _ = load(serialize(graph, fmt))
        assert back == graph
        assert type(back) is type(graph)

    @given(trees(1, 30))
    def test_roundtrip_random(self, t):
        assert load(serialize(t))[0] == t
        assert load(serialize(t, "json"))[0] == t


class TestValidation:
    def test_detects_each_problem(self):
        t = gen.gen_star(3)
        assert cover_problems(t, SubtreeCover.build(t, [[0, 1, 2]]), budget=2)
        assert cover_problems(t, SubtreeCover.build(t, [[0, 1]]))
        assert cover_problems(t, SubtreeCover.build(t, [[0, 1], [1, 2]], "partition"))
        assert not cover_problems(t, SubtreeCover.build(t, [[0, 1], [1, 2]]))
        p4 = gen.gen_path(4)
        assert any("connected" in p for p in cover_problems(p4, SubtreeCover.build(p4, [[0, 2], [1]])))
        with pytest.raises(InvalidCoverError):
            check_cover(p4, SubtreeCover.build(p4, [[0, 2], [1]]))

    def test_rooted_outdegree(self):
        t = gen.gen_path(3)  # 0 - 1 - 2
        rooted = SubtreeCover(2, ((0, 1),), rooted_at=0)
        assert not cover_problems(t, rooted, budget=1)
        centred = SubtreeCover(2, ((0, 1),), rooted_at=1)
        assert cover_problems(t, centred, budget=1)
        assert any("root" in p for p in cover_problems(t, SubtreeCover(2, ((0,), (1,)), rooted_at=0)))


class TestGenerators:
    def test_complete_rooted_examples(self):
        assert gen.gen_complete_rooted(2, 2).n == 7
        assert gen.gen_complete_rooted(5, 0).n == 1
        rt = gen.gen_complete_rooted(3, 1)
        assert rt.n == 4 and rt.outdegree(0) == 3

    @pytest.mark.parametrize("delta", [1, 2, 3, 4])
    @pytest.mark.parametrize("h", [0, 1, 2, 3])
    def test_complete_rooted_shape(self, delta, h):
        rt = gen.gen_complete_rooted(delta, h)
        if delta >= 2:
            assert rt.n == (delta ** (h + 1) - 1) // (delta - 1)
        depth = [0] * rt.n
        for v in rt.order[1:]:
            depth[v] = depth[rt.parent[v]] + 1
        for v in range(rt.n):
            assert rt.outdegree(v) in (0, delta)
            if rt.outdegree(v) == 0:
                assert depth[v] == h

    def test_complete_unrooted_examples(self):
        assert gen.gen_complete_unrooted(3, 2).n == 10
        assert nx.is_isomorphic(nx_graph(gen.gen_complete_unrooted(2, 4)), nx_graph(gen.gen_path(9)))
        assert gen.gen_complete_unrooted(3, 1).degrees() == [3, 1, 1, 1]

    @pytest.mark.parametrize("delta", [3, 4, 5])
    @pytest.mark.parametrize("h", [1, 2, 3])
    def test_complete_unrooted_shape(self, delta, h):
        t = gen.gen_complete_unrooted(delta, h)
        assert t.n == 1 + delta * ((delta - 1) ** h - 1) // (delta - 2)
        assert all(x in (1, delta) for x in t.degrees())
        dist = nx.single_source_shortest_path_length(nx_graph(t), 0)
        assert {dist[v] for v in t.leaves()} == {h}

    def test_caterpillar_lb_counts(self):
        t = gen.gen_caterpillar_lb(3, 1)
        assert t.n == 4 and t.degrees()[1] == 3
        t = gen.gen_caterpillar_lb(6, 3)
        assert t.n == 17 and [t.degree(v) for v in (1, 2, 3)] == [6, 6, 6]
        t = gen.gen_caterpillar_lb(4, 2)
        assert t.n == 8 and t.max_degree() == 4

    def test_pw_lb_rooted(self):
        rt = gen.gen_pw_lb_rooted(3, 3, 1, [2])
        # path of 5 spine vertices; v0 gets 1 leaf, the others 2 each
        assert rt.n == 5 + 1 + 4 * 2
        assert rt.outdegree(0) == 3
        for delta, d, k in [(4, 3, 1), (5, 3, 1), (4, 3, 2), (4, 4, 2)]:
            rt = gen.gen_pw_lb_rooted(delta, d, k)
            assert rt.outdegree(0) == delta
            assert rt.max_outdegree() == delta
            assert pathwidth(rt.tree) == k

    def test_pw_lb_rooted_rejects_short_paths(self):
        with pytest.raises(TreeCoverError):
            gen.gen_pw_lb_rooted(5, 3, 1, [3])

    def test_pw_lb_unrooted(self):
        for delta, d, k, n in [(4, 3, 1, 2), (5, 3, 1, 1), (5, 4, 2, 1)]:
            t = gen.gen_pw_lb_unrooted(delta, d, k, n)
            assert t.max_degree() == delta
            assert all(t.degree(v) == delta for v in range(1, 2 * n + 2))

    def test_subdivided_star(self):
        t = gen.gen_subdivided_star_lb(3, 1)
        assert t.leaf_count() == 6

    def test_arms(self):
        g = gen.gen_arms(2)
        assert g.n == 64 and g.m == 16 + 8 * 9
        assert g.max_degree() == 3
        cycle = nx_graph(g).subgraph(range(16))
        assert nx.is_connected(cycle) and all(d == 2 for _, d in cycle.degree)
        # each gadget has m = 4 cross edges, the base edge among them
        rungs = [(u, v) for u, v in g.edges if u >= 16 and v == u + 1 and u % 2 == 0]
        assert len(rungs) == 8 * 3
        h = nx_graph(g)
        assert nx.is_biconnected(h)
        # outerplanar iff adding an apex keeps the graph planar
        h.add_edges_from((-1, v) for v in range(g.n))
        assert nx.check_planarity(h)[0]

    def test_random_tree_reproducible(self):
        assert gen.random_tree(50, seed=3) == gen.random_tree(50, seed=3)
        assert gen.random_tree(1).n == 1

    def test_vertex_limit(self, monkeypatch):
        monkeypatch.setenv("TREECOVER_VERTEX_LIMIT", "100")
        with pytest.raises(TreeCoverError, match="limit"):
            gen.gen_complete_rooted(3, 5)
        monkeypatch.setenv("TREECOVER_VERTEX_LIMIT", "many")
        with pytest.raises(TreeCoverError):
            gen.gen_complete_rooted(3, 2)

    @settings(max_examples=50)
    @given(trees(2, 50))
    def test_rooted_tree_orientation(self, t):
        rt = RootedTree(t, t.n - 1)
        for v in range(t.n):
            expected = t.degree(v) if v == rt.root else t.degree(v) - 1
            assert rt.outdegree(v) == expected
