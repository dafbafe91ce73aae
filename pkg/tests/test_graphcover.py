from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treecover import generators as gen
from treecover.errors import PreconditionError
from treecover.graph import Graph, cover_problems
from treecover.graphcover import cover_via_cvc, cover_via_spanning, edge_color
from treecover.oracle import oracle_subgraph_cover


def _from_nx(g: nx.Graph) -> Graph:
    g = nx.convert_node_labels_to_integers(g)
    return Graph(g.number_of_nodes(), list(g.edges()))


def _cycle(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def _check_coloring(g: Graph) -> None:
    col = edge_color(g)
    assert col.is_proper(g)
    assert col.num_colors <= g.max_degree() + 1


class TestEdgeColor:
    def test_matching(self):
        g = Graph(6, [(0, 1), (2, 3), (4, 5)])
        assert edge_color(g).num_colors == 1

    def test_odd_cycle(self):
        assert edge_color(Graph(5, _cycle(5))).num_colors == 3

    def test_star(self):
        assert edge_color(gen.gen_star(4)).num_colors == 4

    def test_empty(self):
        assert edge_color(Graph(3, [])).num_colors == 0

    def test_subset(self):
        g = _from_nx(nx.complete_graph(5))
        col = edge_color(g, [0, 1, 2])
        assert col.color.count(-1) == g.m - 3
        assert col.num_colors == 3

    def test_all_small_graphs(self):
        for g in nx.graph_atlas_g()[1:]:  # skip the null graph
            _check_coloring(_from_nx(g))

    def test_random_graphs(self):
        for seed in range(500):
            n = 2 + seed % 49
            _check_coloring(gen.random_graph(n, [0.05, 0.2, 0.5, 0.9][seed % 4], seed=seed))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(2, 40), st.floats(0.05, 1.0), st.integers(0, 2**32 - 1))
    def test_property(self, n, p, seed):
        _check_coloring(gen.random_graph(n, p, seed=seed))


class TestCvc:
    def test_cycle_is_its_own_cover(self):
        for n in (3, 6, 9):
            g = Graph(n, _cycle(n))
            assert len(cover_via_cvc(g, _cycle(n), 3)) == 1

    def test_k4_hamiltonian(self):
        g = _from_nx(nx.complete_graph(4))
        cover = cover_via_cvc(g, _cycle(4), 3)
        assert len(cover) == 2
        assert cover_problems(g, cover, budget=3) == []

    def test_wheel_rim(self):
        g = _from_nx(nx.wheel_graph(6))  # hub 0, rim 1..5
        rim = [(i, i % 5 + 1) for i in range(1, 6)]
        cover = cover_via_cvc(g, rim, 3)
        assert len(cover) == 6
        assert cover.meta["k"] == 5

    def test_hamiltonian_count(self):
        # a Hamiltonian cycle leaves k <= Δ - 2
        for n in range(4, 9):
            g = _from_nx(nx.complete_graph(n))
            for d in (3, 4, 5):
                cover = cover_via_cvc(g, _cycle(n), d)
                assert len(cover) == -(-(g.max_degree() - 1) // (d - 2))
                assert cover_problems(g, cover, budget=d) == []

    def test_rejects(self):
        g = _from_nx(nx.complete_graph(4))
        with pytest.raises(PreconditionError, match="connected"):
            cover_via_cvc(g, [(0, 1), (2, 3)], 3)
        with pytest.raises(PreconditionError, match="vertex cover"):
            cover_via_cvc(g, [(0, 1)], 3)
        with pytest.raises(PreconditionError):
            cover_via_cvc(g, _cycle(4), 2)
        with pytest.raises(PreconditionError):
            cover_via_cvc(g, [], 3)
        with pytest.raises(PreconditionError):
            cover_via_cvc(g, [(0, 9)], 3)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(3, 30), st.floats(0.1, 0.9), st.integers(0, 2**32 - 1), st.integers(0, 3))
    def test_spanning_tree_cover(self, n, p, seed, extra):
        g = gen.random_graph(n, p, seed=seed)
        nxg = nx.Graph(g.edges)
        nxg.add_nodes_from(range(n))
        if not nx.is_connected(nxg):
            return
        tree = list(nx.bfs_tree(nxg, 0).to_undirected().edges())
        delta_h = max(dict(nx.Graph(tree).degree()).values())
        d = delta_h + 1 + extra
        cover = cover_via_spanning(g, tree, d)
        assert cover_problems(g, cover, budget=d) == []
        k = cover.meta["k"]
        assert len(cover) == -(-(k + 1) // (d - delta_h))


class TestSpanning:
    def test_path_itself(self):
        g = gen.gen_path(6)
        assert len(cover_via_spanning(g, list(range(5)), 3)) == 1

    def test_k4_star(self):
        g = _from_nx(nx.complete_graph(4))
        assert len(cover_via_spanning(g, [(0, 1), (0, 2), (0, 3)], 4)) == 3

    def test_k4_cycle(self):
        g = _from_nx(nx.complete_graph(4))
        assert len(cover_via_spanning(g, _cycle(4), 3)) == 2

    def test_rejects_non_spanning(self):
        g = _from_nx(nx.complete_graph(4))
        with pytest.raises(PreconditionError, match="span"):
            cover_via_spanning(g, [(0, 1), (1, 2)], 3)


class TestArms:
    @pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3)])
    def test_reduced_needs_more_than_k_minus_one(self, m, n):
        g = gen.gen_arms(2, m=m, n=n)
        assert g.max_degree() == 3
        assert oracle_subgraph_cover(g, 2, cap=16) == 2
