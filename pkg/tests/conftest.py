from __future__ import annotations

import io
import sys
from contextlib import redirect_stderr, redirect_stdout
from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import strategies as st

from treecover.cli import main
from treecover.graph import Graph, RootedTree, Tree


def to_tree(g: nx.Graph) -> Tree:
    nodes = sorted(g.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    return Tree(len(nodes), sorted((min(index[u], index[v]), max(index[u], index[v])) for u, v in g.edges))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (Tree(1, []),)
    return tuple(to_tree(g) for g in nx.nonisomorphic_trees(n))


def all_trees(lo: int, hi: int) -> list[Tree]:
    """Every non-isomorphic tree with ``lo <= n <= hi`` vertices."""
    return [t for n in range(lo, hi + 1) for t in _trees(n)]


def all_trees_by_edges(max_edges: int, min_edges: int = 1) -> list[Tree]:
    return all_trees(min_edges + 1, max_edges + 1)


@st.composite
def trees(draw: st.DrawFn, min_n: int = 2, max_n: int = 40) -> Tree:
    """Random trees from a random parent array, then a random relabelling."""
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    perm = draw(st.permutations(range(n)))
    return Tree(n, [(perm[p], perm[i + 1]) for i, p in enumerate(parents)])


@st.composite
def rooted_trees(draw: st.DrawFn, min_n: int = 2, max_n: int = 40) -> RootedTree:
    t = draw(trees(min_n, max_n))
    return RootedTree(t, draw(st.integers(0, t.n - 1)))


def nx_graph(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


@pytest.fixture(scope="session")
def small_trees() -> list[Tree]:
    return all_trees(2, 9)


def run_cli(argv: list[str], stdin: str = "") -> tuple[int, str, str]:
    """Run the command line in-process; returns ``(exit code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    saved = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = main([str(a) for a in argv])
    finally:
        sys.stdin = saved
    return code, out.getvalue(), err.getvalue()


ACCEPTANCE_LINES: list[str] = []


def report(criterion: int, ok: bool, detail: str) -> None:
    """Record and print one acceptance verdict, then fail the test if needed."""
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter) -> None:
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
