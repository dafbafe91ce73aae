"""Brute-force reference solvers for small instances.

None of these share solving logic with the main modules: they enumerate
edge subsets, paths or integer boxes directly. Every oracle has a size cap
and raises :class:`CapExceededError` beyond it rather than degrading.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import CapExceededError, PreconditionError
from .graph import Budget, Graph, RootedTree, Tree, budget_list

DEFAULT_VERTEX_CAP = 10
DEFAULT_EDGE_CAP = 9


def _cap(value: int, cap: int, what: str) -> None:
    if value > cap:
        raise CapExceededError(f"{what} = {value} exceeds the oracle cap {cap}")


def _valid_subsets(
    graph: Graph, caps: Sequence[int], parent: Sequence[int] | None = None, root: int | None = None
) -> list[int]:
    """Bitmasks of all non-empty connected edge subsets within the degree caps.

    With ``parent`` given, caps bound outdegree and subsets must contain ``root``.
    """
    m = graph.m
    out = []
    for mask in range(1, 1 << m):
        deg: dict[int, int] = {}
        nbrs: dict[int, list[int]] = {}
        for e in range(m):
            if mask >> e & 1:
                a, b = graph.edges[e]
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
                nbrs.setdefault(a, []).append(b)
                nbrs.setdefault(b, []).append(a)
        if root is not None and root not in deg:
            continue
        ok = True
        for v, dv in deg.items():
            if parent is not None and v != root:
                dv -= 1
            if dv > caps[v]:
                ok = False
                break
        if not ok:
            continue
        start = next(iter(nbrs))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) == len(nbrs):
            out.append(mask)
    return out


def _min_partition(m: int, parts: list[int]) -> int:
    full = (1 << m) - 1
    by_low: dict[int, list[int]] = {}
    for p in parts:
        by_low.setdefault((p & -p).bit_length() - 1, []).append(p)

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        low = (mask & -mask).bit_length() - 1
        out = m + 1
        for p in by_low.get(low, ()):
            if p & ~mask == 0:
                out = min(out, 1 + best(mask & ~p))
        return out

    return best(full)


def _min_cover(m: int, parts: list[int], limit: int | None = None) -> int:
    full = (1 << m) - 1
    containing = [[p for p in parts if p >> e & 1] for e in range(m)]

    @lru_cache(maxsize=None)
    def best(covered: int) -> int:
        if covered == full:
            return 0
        low = (~covered & -~covered).bit_length() - 1
        return 1 + min(best(covered | p) for p in containing[low])

    return best(0)


def oracle_minpart(tree: Tree, d: int, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """Fewest connected degree-``d`` subtrees partitioning the edges, by exhaustive DP."""
    _cap(tree.n, cap, "vertex count")
    if tree.m == 0:
        raise PreconditionError("the tree must have at least one edge")
    return _min_partition(tree.m, _valid_subsets(tree, [d] * tree.n))


def oracle_mincover(tree: Tree, f: Budget, cap: int = DEFAULT_EDGE_CAP) -> int:
    """Fewest subtrees of degree at most ``f`` covering the edges, by exact set cover."""
    _cap(tree.m, cap, "edge count")
    if tree.m == 0:
        raise PreconditionError("the tree must have at least one edge")
    return _min_cover(tree.m, _valid_subsets(tree, budget_list(tree, f)))


def oracle_rmc(rooted: RootedTree, f: Budget, cap: int = DEFAULT_EDGE_CAP) -> int:
    """Fewest root-containing subtrees of outdegree at most ``f`` covering the edges."""
    tree = rooted.tree
    _cap(tree.m, cap, "edge count")
    if tree.m == 0:
        return 1
    parts = _valid_subsets(tree, budget_list(tree, f), rooted.parent, rooted.root)
    return _min_cover(tree.m, parts)


def oracle_pathwidth(tree: Tree, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """Pathwidth by recursion over every path of every component."""
    _cap(tree.n, cap, "vertex count")
    adj = [set(a) for a in tree.adj]

    def components(vs: frozenset[int]) -> list[frozenset[int]]:
        out, seen = [], set()
        for v in vs:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y in vs and y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    @lru_cache(maxsize=None)
    def pw(vs: frozenset[int]) -> int:
        if len(vs) == 1:
            return 0
        best = len(vs)
        for s in vs:
            stack = [(s, (s,))]
            while stack:
                u, path = stack.pop()
                rest = vs - set(path)
                val = max((pw(c) for c in components(rest)), default=0)
                best = min(best, val + 1)
                for w in adj[u]:
                    if w in vs and w not in path:
                        stack.append((w, path + (w,)))
        return best

    return pw(frozenset(range(tree.n)))


def oracle_cliques(class_sizes: Sequence[int], d: int, cap: int = 24) -> int:
    """Fewest cliques of at most ``d`` vertices partitioning ``K<n_1..n_k>``, exhaustively."""
    _cap(sum(class_sizes), cap, "vertex count")
    if d < 1:
        raise PreconditionError("d must be positive")

    @lru_cache(maxsize=None)
    def best(sizes: tuple[int, ...]) -> int:
        live = [i for i, s in enumerate(sizes) if s]
        if not live:
            return 0
        first, others = live[0], live[1:]
        out = sum(sizes)
        # Some clique holds a vertex of the first non-empty class.
        for r in range(0, min(d - 1, len(others)) + 1):
            for pick in combinations(others, r):
                nxt = list(sizes)
                for i in (first, *pick):
                    nxt[i] -= 1
                out = min(out, 1 + best(tuple(sorted(nxt, reverse=True))))
        return out

    return best(tuple(sorted(class_sizes, reverse=True)))


def oracle_ilp(lemma: int, A: int, d: int, B: int | None = None, *, lo: int = 0, hi: int | None = None) -> int:
    """Minimum of ``x + y1 + y2 + z`` over the integer box ``[lo, hi]^4`` under a program's constraints.

    ``lemma`` 1 needs ``B``. ``hi`` defaults to a box that provably contains
    an optimum of the non-negative program.
    """
    if lemma == 1:
        if B is None:
            raise PreconditionError("program 1 needs B")
        hi = B + d if hi is None else hi
    elif lemma == 2:
        hi = 3 * A if hi is None else hi
    else:
        raise PreconditionError("lemma must be 1 or 2")
    _cap(hi - lo + 1, 400, "box width")
    r = np.arange(lo, hi + 1, dtype=np.int64)
    x, y1, y2 = np.meshgrid(r, r, r, indexing="ij")
    if lemma == 1:
        ok = ((d - 1) * (x + y1) >= B) & ((d - 1) * (x + y2) >= B)
        need = A - (d - 2) * x - (d - 1) * (y1 + y2)
        z = np.maximum(-(-need // d), lo)
    else:
        ok = ((d - 1) * (x + y1) >= d * A) & ((d - 1) * (x + y2) >= d * A)
        need = (d - 1) * A - (d - 2) * x - (d - 1) * (y1 + y2)
        z = np.maximum(-(-need // (d - 1)), lo)
    ok &= z <= hi
    if not ok.any():
        raise CapExceededError("no feasible point in the box")
    return int((x + y1 + y2 + z)[ok].min())


# -- path covers ---------------------------------------------------------------


def _all_paths(tree: Tree) -> list[tuple[int, frozenset[int]]]:
    """Every path with at least one edge, as ``(edge mask, vertex set)``."""
    out = []
    for s in range(tree.n):
        stack = [(s, -1, 0, frozenset([s]))]
        while stack:
            u, prev, mask, verts = stack.pop()
            if mask and u > s:
                out.append((mask, verts))
            for w, e in zip(tree.adj[u], tree.inc[u]):
                if w != prev:
                    stack.append((w, u, mask | 1 << e, verts | {w}))
    return out


def oracle_path_cover(tree: Tree, through: int | None = None, cap: int = DEFAULT_VERTEX_CAP) -> tuple[int, int]:
    """``(fewest paths, fewest total edges among covers with that many paths)``.

    With ``through`` set, only paths containing that vertex are allowed; the
    count is then ``m + 1`` when no cover exists.
    """
    _cap(tree.n, cap, "vertex count")
    if tree.m == 0:
        raise PreconditionError("the tree must have at least one edge")
    m = tree.m
    paths = [p for p, vs in _all_paths(tree) if through is None or through in vs]
    full = (1 << m) - 1
    containing = [[p for p in paths if p >> e & 1] for e in range(m)]
    inf = (m + 1, 0)

    @lru_cache(maxsize=None)
    def best(covered: int) -> tuple[int, int]:
        if covered == full:
            return (0, 0)
        low = (~covered & -~covered).bit_length() - 1
        out = inf
        for p in containing[low]:
            cnt, tot = best(covered | p)
            if cnt <= m:
                out = min(out, (cnt + 1, tot + bin(p).count("1")))
        return out

    return best(0)


def oracle_centroids(tree: Tree, cap: int = DEFAULT_VERTEX_CAP) -> list[int]:
    """Vertices ``v`` admitting a minimum path cover whose paths all contain ``v``."""
    target, _ = oracle_path_cover(tree, cap=cap)
    return [v for v in range(tree.n) if oracle_path_cover(tree, through=v, cap=cap)[0] == target]


def oracle_subgraph_cover(graph: Graph, d: int, cap: int = 16) -> int:
    """Fewest connected subgraphs of max degree ``d`` covering all edges of ``graph``."""
    _cap(graph.m, cap, "edge count")
    return _min_cover(graph.m, _valid_subsets(graph, [d] * graph.n))
