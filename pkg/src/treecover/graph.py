"""Graphs, trees, rooted trees and subtree covers.

Vertices are dense integers ``0..n-1``. Edge ``i`` is ``edges[i]``; that index
is the edge id used by every cover in the package, and it is also the
serialisation order. Adjacency lists keep insertion order, and ``inc[v][j]`` is
the id of the edge joining ``v`` to ``adj[v][j]``.

All objects are treated as immutable after construction. The lists are exposed
for speed, not for mutation.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import InvalidCoverError, PreconditionError, TreeCoverError

Edge = tuple[int, int]
CoverKind = Literal["partition", "covering"]


class Graph:
    """A finite simple undirected graph. Connectivity is not required."""

    __slots__ = ("n", "edges", "adj", "inc", "labels", "_edge_index", "_edge_array")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]],
        *,
        labels: Sequence[int] | None = None,
        _check_duplicates: bool = True,
    ) -> None:
        if n < 1:
            raise TreeCoverError("a graph needs at least one vertex")
        self.n = n
        self.edges: list[Edge] = [(int(u), int(v)) for u, v in edges]
        adj: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise TreeCoverError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise TreeCoverError(f"edge {i} is a self-loop at {u}")
            adj[u].append(v)
            adj[v].append(u)
            inc[u].append(i)
            inc[v].append(i)
        self.adj = adj
        self.inc = inc
        self.labels: list[int] | None = list(labels) if labels is not None else None
        self._edge_index: dict[Edge, int] | None = None
        self._edge_array: np.ndarray | None = None
        if _check_duplicates:
            seen: set[Edge] = set()
            for i, (u, v) in enumerate(self.edges):
                key = (u, v) if u < v else (v, u)
                if key in seen:
                    raise TreeCoverError(f"edge {i} = ({u}, {v}) is a duplicate")
                seen.add(key)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, 2)`` int64 array (cached)."""
        if self._edge_array is None:
            arr = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
            arr.setflags(write=False)
            self._edge_array = arr
        return self._edge_array

    def edge_id(self, u: int, v: int) -> int:
        """Id of the edge ``uv``; raises ``KeyError`` if absent."""
        if self._edge_index is None:
            self._edge_index = {
                ((a, b) if a < b else (b, a)): i for i, (a, b) in enumerate(self.edges)
            }
        return self._edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        try:
            self.edge_id(u, v)
        except KeyError:
            return False
        return True

    def is_connected(self) -> bool:
        return len(reachable(self.adj, 0)) == self.n

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return type(self) is type(other) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.edges)))


class Tree(Graph):
    """A tree: connected, acyclic, simple. ``K_1`` is allowed."""

    __slots__ = ()

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]],
        *,
        labels: Sequence[int] | None = None,
    ) -> None:
        # With m = n - 1 and connectivity, duplicates would force a cycle, so
        # the expensive duplicate scan is redundant.
        super().__init__(n, edges, labels=labels, _check_duplicates=False)
        if self.m != n - 1:
            raise TreeCoverError(f"a tree on {n} vertices needs {n - 1} edges, got {self.m}")
        if not self.is_connected():
            raise TreeCoverError("edge set is not connected (so it contains a cycle)")

    def leaves(self) -> list[int]:
        """Vertices of degree 1 (``K_1`` has none)."""
        return [v for v, a in enumerate(self.adj) if len(a) == 1]

    def leaf_count(self) -> int:
        return sum(1 for a in self.adj if len(a) == 1)

    def rooted(self, root: int = 0) -> RootedTree:
        return RootedTree(self, root)

    def restrict(self, vertices: Iterable[int]) -> tuple[Tree, list[int], list[int]]:
        """The subtree induced by a connected vertex set.

        Returns ``(sub, vmap, emap)`` where ``vmap[local] = global`` vertex and
        ``emap[local] = global`` edge id. Local ids follow increasing global ids,
        so smallest-id tie-breaking carries over.
        """
        vmap = sorted(set(vertices))
        local = {g: i for i, g in enumerate(vmap)}
        emap: list[int] = []
        sub_edges: list[Edge] = []
        for gv in vmap:
            for w, e in zip(self.adj[gv], self.inc[gv]):
                if gv < w and w in local:
                    emap.append(e)
        emap.sort()
        for e in emap:
            u, v = self.edges[e]
            sub_edges.append((local[u], local[v]))
        return Tree(len(vmap), sub_edges), vmap, emap


class RootedTree:
    """A tree with a root; edges are oriented away from the root.

    ``order`` is a BFS order from the root, ``parent[root] == -1``,
    ``parent_edge[v]`` is the id of the edge to the parent, and ``children[v]``
    is sorted by vertex id.
    """

    __slots__ = ("tree", "root", "parent", "parent_edge", "order", "children")

    def __init__(self, tree: Tree, root: int = 0) -> None:
        if not 0 <= root < tree.n:
            raise TreeCoverError(f"root {root} is not a vertex")
        self.tree = tree
        self.root = root
        n = tree.n
        adj, inc = tree.adj, tree.inc
        parent = [-2] * n
        parent_edge = [-1] * n
        parent[root] = -1
        order = [root]
        append = order.append
        for v in order:
            for w, e in zip(adj[v], inc[v]):
                if parent[w] == -2:
                    parent[w] = v
                    parent_edge[w] = e
                    append(w)
        self.parent = parent
        self.parent_edge = parent_edge
        self.order = order
        children: list[list[int]] = [[] for _ in range(n)]
        for v in order[1:]:
            children[parent[v]].append(v)
        for c in children:
            if len(c) > 1:
                c.sort()
        self.children = children

    @property
    def n(self) -> int:
        return self.tree.n

    def outdegree(self, v: int) -> int:
        return len(self.children[v])

    def max_outdegree(self) -> int:
        return max(len(c) for c in self.children)

    def subtree_vertices(self, v: int) -> list[int]:
        """Vertices of the subtree hanging from ``v`` (including ``v``)."""
        out = [v]
        for x in out:
            out.extend(self.children[x])
        return out

    def __repr__(self) -> str:
        return f"RootedTree(n={self.n}, root={self.root})"


def reachable(adj: Sequence[Sequence[int]], start: int) -> list[int]:
    seen = {start}
    out = [start]
    for v in out:
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                out.append(w)
    return out


def path_between(tree: Tree, u: int, v: int) -> list[int]:
    """Vertex sequence of the unique ``u``-``v`` path."""
    parent = {u: -1}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for w in tree.adj[x]:
            if w not in parent:
                parent[w] = x
                stack.append(w)
    out = [v]
    while out[-1] != u:
        out.append(parent[out[-1]])
    out.reverse()
    return out


def path_edges(tree: Graph, vertices: Sequence[int]) -> list[int]:
    return [tree.edge_id(a, b) for a, b in zip(vertices, vertices[1:])]


# --------------------------------------------------------------------------
# Covers


@dataclass(frozen=True)
class SubtreeCover:
    """Edge subsets of a host graph, each inducing a connected subgraph.

    ``parts`` hold sorted edge ids. ``rooted_at`` marks a rooted covering in
    which every part contains that vertex and budgets bound outdegree.
    """

    host_edge_count: int
    parts: tuple[tuple[int, ...], ...]
    kind: CoverKind = "covering"
    rooted_at: int | None = None
    d: int | None = None
    meta: dict[str, object] = field(default_factory=dict, compare=False)

    @classmethod
    def build(
        cls,
        host: Graph,
        parts: Iterable[Iterable[int]],
        kind: CoverKind = "covering",
        *,
        rooted_at: int | None = None,
        d: int | None = None,
    ) -> SubtreeCover:
        return cls(
            host.m,
            tuple(tuple(sorted(set(p))) for p in parts),
            kind,
            rooted_at,
            d,
        )

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return len(self.parts)

    def total_edges(self) -> int:
        return sum(len(p) for p in self.parts)


Budget = int | Sequence[int]


def budget_list(host: Graph, budget: Budget) -> list[int]:
    if isinstance(budget, int):
        return [budget] * host.n
    out = [int(b) for b in budget]
    if len(out) != host.n:
        raise PreconditionError(f"binding function has {len(out)} values for {host.n} vertices")
    return out


def cover_problems(
    host: Graph,
    cover: SubtreeCover,
    *,
    budget: Budget | None = None,
    kind: CoverKind | None = None,
) -> list[str]:
    """List every way ``cover`` fails to be valid for ``host``; empty if valid.

    ``budget`` defaults to ``cover.d``. For a rooted cover it bounds outdegree
    (host must be a tree), otherwise degree.
    """
    problems: list[str] = []
    kind = kind or cover.kind
    if cover.host_edge_count != host.m:
        problems.append(f"cover is for a host with {cover.host_edge_count} edges, host has {host.m}")
        return problems
    if budget is None:
        budget = cover.d
    caps = budget_list(host, budget) if budget is not None else None
    root = cover.rooted_at
    parent: list[int] | None = None
    if root is not None:
        if not isinstance(host, Tree):
            return problems + ["rooted covers need a tree host"]
        if not 0 <= root < host.n:
            return problems + [f"root {root} is not a vertex"]
        parent = RootedTree(host, root).parent

    count = [0] * host.m
    for pi, part in enumerate(cover.parts):
        if len(set(part)) != len(part):
            problems.append(f"part {pi} repeats an edge")
        bad = [e for e in part if not 0 <= e < host.m]
        if bad:
            problems.append(f"part {pi} has unknown edge ids {bad[:5]}")
            continue
        for e in set(part):
            count[e] += 1
        if not part:
            if host.m > 0:
                problems.append(f"part {pi} is empty")
            continue
        deg: dict[int, int] = {}
        nbrs: dict[int, list[int]] = {}
        for e in set(part):
            u, v = host.edges[e]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
            nbrs.setdefault(u, []).append(v)
            nbrs.setdefault(v, []).append(u)
        start = next(iter(nbrs))
        if len(reachable(nbrs, start)) != len(nbrs):
            problems.append(f"part {pi} is not connected")
        if root is not None and root not in nbrs:
            problems.append(f"part {pi} does not contain the root {root}")
        if caps is not None:
            for v, dv in deg.items():
                if parent is not None and v != root:
                    dv -= 1  # the edge to the parent is incoming
                if dv > caps[v]:
                    what = "outdegree" if parent is not None else "degree"
                    problems.append(f"part {pi}: vertex {v} has {what} {dv} > {caps[v]}")
    missing = [e for e, c in enumerate(count) if c == 0]
    if missing:
        problems.append(f"edges not covered: {missing[:10]}")
    if kind == "partition":
        shared = [e for e, c in enumerate(count) if c > 1]
        if shared:
            problems.append(f"edges in more than one part: {shared[:10]}")
    return problems


def check_cover(host: Graph, cover: SubtreeCover, **kw: object) -> SubtreeCover:
    """Raise :class:`InvalidCoverError` unless the cover is valid; return it."""
    problems = cover_problems(host, cover, **kw)  # type: ignore[arg-type]
    if problems:
        raise InvalidCoverError("; ".join(problems))
    return cover


def part_degrees(host: Graph, part: Iterable[int]) -> dict[int, int]:
    deg: dict[int, int] = {}
    for e in part:
        u, v = host.edges[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return deg
