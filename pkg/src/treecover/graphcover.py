"""Coverings of general graphs by connected bounded-degree subgraphs.

Given a connected vertex cover ``H``, colour the edges outside ``H`` with at
most ``k + 1`` matchings, where ``k`` is the maximum degree of ``G - E(H)``.
Then add the matchings to ``H`` in groups of ``d - Δ(H)``. Every part is
connected because each matching edge touches ``V(H)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ._exact import ceil_div
from .errors import PreconditionError
from .graph import Graph, SubtreeCover, check_cover, reachable


@dataclass(frozen=True)
class EdgeColoring:
    color: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return max(self.color, default=-1) + 1

    def is_proper(self, graph: Graph) -> bool:
        for v in range(graph.n):
            cols = [self.color[e] for e in graph.inc[v]]
            if len(set(cols)) != len(cols):
                return False
        return all(c >= 0 for c in self.color)


def edge_color(graph: Graph, edges: Iterable[int] | None = None) -> EdgeColoring:
    """Proper edge colouring with at most ``Δ + 1`` colours (Misra–Gries).

    ``edges`` restricts colouring to a subset; the rest get colour ``-1`` and
    ``Δ`` is then the maximum degree of the subgraph.
    """
    chosen = sorted(set(range(graph.m) if edges is None else edges))
    deg = [0] * graph.n
    for e in chosen:
        u, v = graph.edges[e]
        deg[u] += 1
        deg[v] += 1
    ncol = max(deg, default=0) + 1
    color = [-1] * graph.m
    # at[v][c] = neighbour joined to v by the edge of colour c
    at: list[dict[int, int]] = [{} for _ in range(graph.n)]
    eid = {}
    nbrs: list[list[int]] = [[] for _ in range(graph.n)]
    for e in chosen:
        u, v = graph.edges[e]
        eid[(u, v)] = eid[(v, u)] = e
        nbrs[u].append(v)
        nbrs[v].append(u)
    for lst in nbrs:
        lst.sort()

    def free(v: int) -> int:
        for c in range(ncol):
            if c not in at[v]:
                return c
        raise AssertionError("no free colour")

    def paint(u: int, v: int, c: int) -> None:
        color[eid[(u, v)]] = c
        at[u][c] = v
        at[v][c] = u

    def unpaint(u: int, v: int) -> int:
        e = eid[(u, v)]
        c = color[e]
        color[e] = -1
        del at[u][c]
        del at[v][c]
        return c

    for e in chosen:
        u, v = graph.edges[e]
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for x in nbrs[u]:
                if x in in_fan:
                    continue
                c = color[eid[(u, x)]]
                if c >= 0 and c not in at[last]:
                    fan.append(x)
                    in_fan.add(x)
                    grown = True
                    break
        c = free(u)
        d = free(fan[-1])
        # Invert the c/d path starting at u (it leaves u on a d edge).
        if c != d:
            path = []
            cur, want = u, d
            while want in at[cur]:
                nxt = at[cur][want]
                path.append((cur, nxt))
                cur, want = nxt, (c if want == d else d)
            old = [unpaint(a, b) for a, b in path]
            for (a, b), col in zip(path, old):
                paint(a, b, d if col == c else c)
        # First fan prefix that is still a fan and ends where d is free.
        j = 0
        for j, w in enumerate(fan):
            if j > 0 and color[eid[(u, w)]] in at[fan[j - 1]]:
                raise AssertionError("fan broken before a free endpoint was found")
            if d not in at[w]:
                break
        shifted = [color[eid[(u, fan[i + 1])]] for i in range(j)]
        for i in range(1, j + 1):
            unpaint(u, fan[i])
        for i in range(j):
            paint(u, fan[i], shifted[i])
        paint(u, fan[j], d)
    result = EdgeColoring(tuple(color))
    used = {color[e] for e in chosen}
    if any(c < 0 or c >= ncol for c in used) or not _proper_on(graph, color, chosen):
        raise AssertionError("edge colouring is not proper")
    return result


def _proper_on(graph: Graph, color: Sequence[int], chosen: Sequence[int]) -> bool:
    seen: set[tuple[int, int]] = set()
    for e in chosen:
        for v in graph.edges[e]:
            key = (v, color[e])
            if key in seen:
                return False
            seen.add(key)
    return True


def _edge_ids(graph: Graph, h: Iterable[int] | Iterable[tuple[int, int]]) -> list[int]:
    out = []
    for item in h:
        if isinstance(item, int):
            if not 0 <= item < graph.m:
                raise PreconditionError(f"unknown edge id {item}")
            out.append(item)
        else:
            a, b = item
            if not graph.has_edge(a, b):
                raise PreconditionError(f"({a}, {b}) is not an edge of G")
            out.append(graph.edge_id(a, b))
    return sorted(set(out))


def cover_via_cvc(
    graph: Graph, h: Iterable[int] | Iterable[tuple[int, int]], d: int
) -> SubtreeCover:
    """``ceil((k+1)/(d - Δ(H)))`` connected degree-``d`` subgraphs covering ``G``.

    ``h`` lists the edges of a connected vertex cover ``H`` (ids or pairs);
    ``k`` is the maximum degree of ``G - E(H)``. Colours are grouped in
    increasing order.
    """
    h_edges = _edge_ids(graph, h)
    if not h_edges:
        raise PreconditionError("H needs at least one edge")
    h_set = set(h_edges)
    h_deg: dict[int, int] = {}
    h_nbrs: dict[int, list[int]] = {}
    for e in h_edges:
        a, b = graph.edges[e]
        for x, y in ((a, b), (b, a)):
            h_deg[x] = h_deg.get(x, 0) + 1
            h_nbrs.setdefault(x, []).append(y)
    if len(reachable(h_nbrs, next(iter(h_nbrs)))) != len(h_nbrs):
        raise PreconditionError("H is not connected")
    uncovered = [e for e, (a, b) in enumerate(graph.edges) if a not in h_deg and b not in h_deg]
    if uncovered:
        raise PreconditionError(f"H is not a vertex cover: edges {uncovered[:5]} miss V(H)")
    delta_h = max(h_deg.values())
    if d <= delta_h:
        raise PreconditionError(f"need d > Δ(H) = {delta_h}")
    rest = [e for e in range(graph.m) if e not in h_set]
    deg = [0] * graph.n
    for e in rest:
        a, b = graph.edges[e]
        deg[a] += 1
        deg[b] += 1
    k = max(deg, default=0)
    coloring = edge_color(graph, rest)
    group = d - delta_h
    count = ceil_div(k + 1, group)
    parts: list[list[int]] = [list(h_edges) for _ in range(count)]
    for e in rest:
        parts[coloring.color[e] // group].append(e)
    cover = SubtreeCover.build(graph, parts, "covering", d=d)
    cover.meta.update(k=k, delta_h=delta_h)
    return check_cover(graph, cover, budget=d)


def cover_via_spanning(
    graph: Graph, h: Iterable[int] | Iterable[tuple[int, int]], d: int
) -> SubtreeCover:
    """Covering from a connected spanning subgraph ``H``; ``k <= Δ(G) - δ(H)`` is checked."""
    h_edges = _edge_ids(graph, h)
    touched = {v for e in h_edges for v in graph.edges[e]}
    if len(touched) != graph.n:
        raise PreconditionError("H does not span G")
    min_h = min(sum(1 for e in h_edges if v in graph.edges[e]) for v in range(graph.n))
    cover = cover_via_cvc(graph, h_edges, d)
    if cover.meta["k"] > graph.max_degree() - min_h:
        raise AssertionError("k exceeds Δ(G) - δ(H)")
    return cover
