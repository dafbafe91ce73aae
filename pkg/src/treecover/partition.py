"""Minimum partitions of a tree into degree-d subtrees."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order

from ._exact import ceil_div
from .errors import PreconditionError
from .graph import SubtreeCover, Tree, check_cover, reachable


@dataclass(frozen=True)
class PartitionStats:
    """Degree residues behind the partition count.

    ``n_i[i]`` counts vertices with ``ceil(deg/d) == (deg + i)/d``, that is
    ``deg ≡ -i (mod d)``.
    """

    d: int
    n_i: tuple[int, ...]
    degree_histogram: dict[int, int]


def partition_stats(tree: Tree, d: int) -> PartitionStats:
    counts = [0] * d
    hist: dict[int, int] = {}
    for a in tree.adj:
        deg = len(a)
        counts[(-deg) % d] += 1
        hist[deg] = hist.get(deg, 0) + 1
    return PartitionStats(d, tuple(counts), dict(sorted(hist.items())))


def _check(tree: Tree, d: int) -> None:
    if d < 2:
        raise PreconditionError("d must be at least 2")
    if tree.n < 2:
        raise PreconditionError("the tree must have at least one edge")


def minpart_size_sum(tree: Tree, d: int) -> int:
    """``1 + sum_v (ceil(deg(v)/d) - 1)``."""
    return 1 + sum(ceil_div(len(a), d) - 1 for a in tree.adj)


def minpart_size_residues(tree: Tree, d: int) -> Fraction:
    """``1 + 2(n-1)/d - n + sum_i i*n_i/d`` as an exact rational."""
    stats = partition_stats(tree, d)
    n = tree.n
    weighted = sum(i * c for i, c in enumerate(stats.n_i))
    return Fraction(d + 2 * (n - 1) - n * d + weighted, d)


def minpart_size(tree: Tree, d: int) -> int:
    """Minimum number of degree-``d`` subtrees partitioning the edges of ``tree``."""
    _check(tree, d)
    count = minpart_size_sum(tree, d)
    other = minpart_size_residues(tree, d)
    if other != count:
        raise AssertionError(f"count forms disagree: {count} vs {other}")
    return count


def minpart_partition(tree: Tree, d: int) -> SubtreeCover:
    """A minimum partition into degree-``d`` subtrees, in linear time.

    Rooted at vertex 0, children ranked by vertex id. A non-root vertex passes
    the colour of its parent edge to its first ``d-1`` child edges and opens a
    new colour per further group of ``d``; the root opens one per group of
    ``d``. This is the leaf-peeling argument run top-down. The work is
    vectorised: BFS parents come from scipy, and inherited colours are resolved
    by pointer jumping.
    """
    _check(tree, d)
    n = tree.n
    ea = tree.edge_array()
    u, v = ea[:, 0], ea[:, 1]
    ids = np.arange(n - 1, dtype=np.int64)
    graph = csr_matrix((np.ones(n - 1, dtype=np.int8), (u, v)), shape=(n, n))
    order, pred = breadth_first_order(graph, 0, directed=False, return_predecessors=True)
    pred = pred.astype(np.int64)
    # The child endpoint of every edge, and the edge above every vertex.
    child = np.where(pred[v] == u, v, u)
    parent = pred[child]
    up_edge = np.full(n, -1, dtype=np.int64)
    up_edge[child] = ids
    # Rank of each child among its siblings, by vertex id.
    by_parent = np.lexsort((child, parent))
    sorted_parent = parent[by_parent]
    starts = np.flatnonzero(np.r_[True, sorted_parent[1:] != sorted_parent[:-1]])
    group_start = np.repeat(starts, np.diff(np.r_[starts, n - 1]))
    gs = np.empty(n - 1, dtype=np.int64)
    gs[by_parent] = group_start
    rank = np.empty(n - 1, dtype=np.int64)
    rank[by_parent] = np.arange(n - 1) - group_start
    at_root = parent == 0
    extra = rank >= d - 1
    opener_rank = np.where(at_root, rank // d * d, d - 1 + (rank - (d - 1)) // d * d)
    opens = (at_root | extra) & (rank == opener_rank)
    # Each edge points at the edge whose colour it takes: the head of its star
    # group, or the parent edge for the first d-1 children of a non-root.
    head = by_parent[gs + np.where(at_root | extra, opener_rank, 0)]
    source = np.where(at_root | extra, head, up_edge[parent])
    while True:
        nxt = source[source]
        if np.array_equal(nxt, source):
            break
        source = nxt
    # Number colours by the BFS position of the opening edge's child vertex.
    position = np.empty(n, dtype=np.int64)
    position[order] = np.arange(n)
    openers = np.flatnonzero(opens)
    openers = openers[np.argsort(position[child[openers]], kind="stable")]
    color_of_opener = np.empty(n - 1, dtype=np.int64)
    color_of_opener[openers] = np.arange(openers.size)
    color = color_of_opener[source]
    grouped = np.argsort(color, kind="stable")
    cuts = np.flatnonzero(np.diff(color[grouped])) + 1
    parts = tuple(tuple(a.tolist()) for a in np.split(grouped, cuts))
    return SubtreeCover(tree.m, parts, "partition", None, d)


def _components_without_edges(tree: Tree, removed: set[int]) -> dict[int, list[int]]:
    """Map each vertex to its component in ``tree - removed``, keyed by vertex."""
    nbrs = [
        [w for w, e in zip(tree.adj[v], tree.inc[v]) if e not in removed] for v in range(tree.n)
    ]
    comp: dict[int, list[int]] = {}
    for v in range(tree.n):
        if v not in comp:
            members = reachable(nbrs, v)
            for x in members:
                comp[x] = members
    return comp


def minpart_with_seed(tree: Tree, d: int, seed: Iterable[int]) -> SubtreeCover:
    """A minimum partition having the degree-``d`` maximal subtree ``seed`` as a part.

    The other parts are minimum partitions of the components ``T_v`` of
    ``T - E(seed)`` hanging at vertices ``v`` of the seed.
    """
    _check(tree, d)
    s_edges = sorted(set(seed))
    if not s_edges:
        raise PreconditionError("the seed subtree needs at least one edge")
    if any(not 0 <= e < tree.m for e in s_edges):
        raise PreconditionError("seed contains unknown edge ids")
    deg: dict[int, int] = {}
    nbrs: dict[int, list[int]] = {}
    for e in s_edges:
        u, v = tree.edges[e]
        for a, b in ((u, v), (v, u)):
            deg[a] = deg.get(a, 0) + 1
            nbrs.setdefault(a, []).append(b)
    if len(reachable(nbrs, tree.edges[s_edges[0]][0])) != len(nbrs):
        raise PreconditionError("seed is not connected")
    for v, dv in deg.items():
        if dv > d:
            raise PreconditionError(f"seed has degree {dv} > {d} at vertex {v}")
        if dv != min(d, tree.degree(v)):
            raise PreconditionError(
                f"seed is not maximal: vertex {v} has {dv} seed edges, needs min(d, deg) = "
                f"{min(d, tree.degree(v))}"
            )
    removed = set(s_edges)
    comp = _components_without_edges(tree, removed)
    parts: list[tuple[int, ...]] = [tuple(s_edges)]
    for v in sorted(deg):
        members = comp[v]
        if len(members) < 2:
            continue
        sub, _, emap = tree.restrict(members)
        for part in minpart_partition(sub, d).parts:
            parts.append(tuple(sorted(emap[e] for e in part)))
    cover = SubtreeCover(tree.m, tuple(parts), "partition", None, d)
    if len(parts) != minpart_size(tree, d):
        raise AssertionError("seeded partition is not minimum")
    return check_cover(tree, cover, budget=d)
