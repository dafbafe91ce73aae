"""Coverings of trees by paths and by subtrees with few leaves."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ._exact import ceil_div
from .errors import PreconditionError
from .graph import RootedTree, SubtreeCover, Tree, check_cover


@dataclass(frozen=True)
class PathCoverResult:
    """Paths as vertex sequences plus the equivalent cover over edge ids."""

    paths: SubtreeCover
    vertex_paths: tuple[tuple[int, ...], ...]
    total_edges: int
    ee_count: int | None = None

    def __len__(self) -> int:
        return len(self.vertex_paths)


def leaf_count(tree: Tree) -> int:
    return tree.leaf_count()


def subtree_leaf_counts(tree: Tree, root: int = 0) -> tuple[RootedTree, list[int]]:
    """Leaves of ``tree`` inside each subtree when rooted at ``root``."""
    rt = RootedTree(tree, root)
    adj = tree.adj
    cnt = [1 if len(a) == 1 else 0 for a in adj]
    parent = rt.parent
    for v in reversed(rt.order):
        p = parent[v]
        if p >= 0:
            cnt[p] += cnt[v]
    return rt, cnt


def even_even_edges(tree: Tree) -> list[int]:
    """Edges whose two sides both hold an even number of leaves."""
    if tree.n < 2:
        return []
    rt, cnt = subtree_leaf_counts(tree)
    total = sum(1 for a in tree.adj if len(a) == 1)
    out = []
    for v in rt.order[1:]:
        if cnt[v] % 2 == 0 and (total - cnt[v]) % 2 == 0:
            out.append(rt.parent_edge[v])
    out.sort()
    return out


def even_even_count(tree: Tree) -> int:
    return len(even_even_edges(tree))


def cover_edge_budget(tree: Tree) -> int:
    """``2n - 2 - leaves``: a total edge count always achievable with ``ceil(leaves/2)`` paths (n >= 3)."""
    if tree.n < 2:
        raise PreconditionError("the tree must have at least one edge")
    return 2 * tree.n - 2 - tree.leaf_count()


def _trace_pairing(tree: Tree, doubled: set[int]) -> list[list[int]]:
    """Leaf-to-leaf trails of the multigraph with ``doubled`` edges duplicated.

    At each non-leaf vertex the incident edge copies are listed (single edges
    by neighbour id, then both copies of each doubled edge) and item ``i`` is
    paired with item ``i + half``. Two copies of one edge sit next to each
    other, so they are never paired, and every trail is a path.
    """
    adj, inc, edges = tree.adj, tree.inc, tree.edges
    m = tree.m
    partner_lo = [-1] * (2 * m)  # partner of copy c at its smaller endpoint
    partner_hi = [-1] * (2 * m)
    for v in range(tree.n):
        if len(adj[v]) < 2:
            continue
        nb = sorted(zip(adj[v], inc[v]))
        items = [2 * e for _, e in nb if e not in doubled]
        for _, e in nb:
            if e in doubled:
                items += [2 * e, 2 * e + 1]
        half = len(items) // 2
        if len(items) % 2:
            raise AssertionError(f"odd multigraph degree at vertex {v}")
        arr_for = {}
        for i in range(half):
            a, b = items[i], items[i + half]
            arr_for[a] = b
            arr_for[b] = a
        for c, p in arr_for.items():
            x, y = edges[c // 2]
            if v == min(x, y):
                partner_lo[c] = p
            else:
                partner_hi[c] = p
    used = bytearray(2 * m)
    trails: list[list[int]] = []
    for leaf in sorted(v for v in range(tree.n) if len(adj[v]) == 1):
        c = 2 * inc[leaf][0]
        if used[c]:
            continue
        verts = [leaf]
        cur = leaf
        while True:
            used[c] = 1
            x, y = edges[c // 2]
            nxt = y if cur == x else x
            verts.append(nxt)
            if len(adj[nxt]) == 1:
                break
            c = partner_lo[c] if nxt == min(x, y) else partner_hi[c]
            cur = nxt
        trails.append(verts)
    if sum(used) != m + len(doubled):
        raise AssertionError("pairing left edge copies untraced")
    return trails


def _result(tree: Tree, vpaths: list[list[int]], ee: int | None) -> PathCoverResult:
    parts = []
    for vp in vpaths:
        parts.append(tuple(sorted(tree.edge_id(a, b) for a, b in zip(vp, vp[1:]))))
    cover = SubtreeCover(tree.m, tuple(parts), "covering", None, 2)
    check_cover(tree, cover, budget=2)
    return PathCoverResult(cover, tuple(tuple(p) for p in vpaths), sum(len(p) for p in parts), ee)


def min_path_cover_even(tree: Tree) -> PathCoverResult:
    """``leaves/2`` leaf-to-leaf paths with ``n - 1 + ee(T)`` edges in total (even leaf count)."""
    if tree.n < 2:
        raise PreconditionError("the tree must have at least one edge")
    ell = tree.leaf_count()
    if ell % 2:
        raise PreconditionError(f"leaf count {ell} is odd")
    ee = even_even_edges(tree)
    trails = _trace_pairing(tree, set(ee))
    res = _result(tree, trails, len(ee))
    if res.total_edges != tree.n - 1 + len(ee):
        raise AssertionError("edge total differs from n - 1 + ee")
    return res


def attachment_vertex(tree: Tree, leaf: int, active: Sequence[Sequence[int]] | None = None) -> int:
    """First vertex of degree >= 3 on the walk in from ``leaf`` (or the far end of a path)."""
    adj = active if active is not None else tree.adj
    prev, cur = -1, leaf
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if cur != leaf and len(adj[cur]) != 2:
            return cur
        if not nxt:
            return cur
        prev, cur = cur, nxt[0]


def min_path_cover(tree: Tree) -> PathCoverResult:
    """``ceil(leaves/2)`` paths covering the tree.

    Odd leaf counts get a virtual leaf at the attachment vertex of the
    smallest leaf; the even algorithm runs on the enlarged tree and the part
    through the virtual leaf is trimmed back from its non-leaf end.
    """
    if tree.n < 2:
        raise PreconditionError("the tree must have at least one edge")
    ell = tree.leaf_count()
    if ell % 2 == 0:
        return min_path_cover_even(tree)
    u = attachment_vertex(tree, min(tree.leaves()))
    z = tree.n
    big = Tree(tree.n + 1, list(tree.edges) + [(u, z)])
    trails = _trace_pairing(big, set(even_even_edges(big)))
    vpaths: list[list[int]] = []
    odd: list[int] = []
    for tr in trails:
        if tr[0] == z:
            odd = tr[1:]
        elif tr[-1] == z:
            odd = tr[-2::-1]
        else:
            vpaths.append(tr)
    # odd runs from u to a leaf; drop leading edges that other paths cover.
    covered: dict[int, int] = {}
    for vp in vpaths:
        for a, b in zip(vp, vp[1:]):
            e = tree.edge_id(a, b)
            covered[e] = covered.get(e, 0) + 1
    while len(odd) > 2 and covered.get(tree.edge_id(odd[0], odd[1]), 0) > 0:
        odd = odd[1:]
    vpaths.append(odd)
    return _result(tree, vpaths, None)


def centroid_set(tree: Tree) -> list[int]:
    """Vertices ``v`` where every component of ``T - v`` holds at most ``ceil(leaves/2)`` leaves."""
    if tree.n < 2:
        raise PreconditionError("the tree must have at least one edge")
    rt, cnt = subtree_leaf_counts(tree)
    total = cnt[rt.root]
    cap = ceil_div(total, 2)
    out = []
    for v in range(tree.n):
        worst = total - cnt[v] if v != rt.root else 0
        for c in rt.children[v]:
            worst = max(worst, cnt[c])
        if worst <= cap:
            out.append(v)
    return out


def span_of_leaves(tree: Tree, leaves: Iterable[int]) -> list[int]:
    """Edge ids of the union of all paths between pairs of the given leaves."""
    s = sorted(set(leaves))
    if len(s) < 2:
        raise PreconditionError("need at least two leaves")
    bad = [v for v in s if not (0 <= v < tree.n and tree.degree(v) == 1)]
    if bad:
        raise PreconditionError(f"not leaves: {bad}")
    return _span(tree, s)


def _span(tree: Tree, s: Sequence[int]) -> list[int]:
    rt = RootedTree(tree, s[0])
    cnt = [0] * tree.n
    for v in s:
        cnt[v] = 1
    out = []
    for v in reversed(rt.order):
        p = rt.parent[v]
        if p >= 0 and cnt[v]:
            cnt[p] += cnt[v]
            out.append(rt.parent_edge[v])
    out.sort()
    return out


def cover_few_leaves(tree: Tree, d: int) -> SubtreeCover:
    """``ceil(leaves/d)`` subtrees covering the tree, each with at most ``d`` leaves.

    Repeatedly take one leaf from each of ``d`` distinct attachment vertices
    while there are at least ``d`` of them. Then finish with a set ``L_0``
    meeting every attachment vertex plus chunks of ``d`` of the rest.
    """
    if d < 2:
        raise PreconditionError("d must be at least 2")
    if tree.n < 2:
        raise PreconditionError("the tree must have at least one edge")
    remaining = sorted(tree.leaves())
    ell = len(remaining)
    groups: list[list[int]] = []
    while len(remaining) > d:
        span = _span(tree, remaining)
        active: list[list[int]] = [[] for _ in range(tree.n)]
        for e in span:
            a, b = tree.edges[e]
            active[a].append(b)
            active[b].append(a)
        by_att: dict[int, list[int]] = {}
        for leaf in remaining:
            by_att.setdefault(attachment_vertex(tree, leaf, active), []).append(leaf)
        xs = sorted(by_att)
        if len(xs) >= d:
            chosen = [by_att[x][0] for x in xs[:d]]
            groups.append(chosen)
            gone = set(chosen)
            remaining = [v for v in remaining if v not in gone]
            continue
        l0 = [by_att[x][0] for x in xs]
        taken = set(l0)
        rest = [v for v in remaining if v not in taken]
        fill = d - len(l0)
        l0 += rest[:fill]
        rest = rest[fill:]
        groups.append(sorted(l0))
        for i in range(0, len(rest), d):
            chunk = rest[i : i + d]
            if len(chunk) == 1:
                # A lone leaf spans no edge; pair it with a leaf of L_0.
                chunk = chunk + [min(l0)]
            groups.append(chunk)
        remaining = []
    if remaining:
        groups.append(remaining)
    parts = [tuple(_span(tree, sorted(g))) for g in groups]
    cover = SubtreeCover(tree.m, tuple(parts), "covering", None, None)
    check_cover(tree, cover)
    if len(parts) != ceil_div(ell, d):
        raise AssertionError("few-leaf cover has the wrong size")
    return cover


def part_leaf_count(tree: Tree, part: Iterable[int]) -> int:
    deg: dict[int, int] = {}
    for e in part:
        a, b = tree.edges[e]
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    return sum(1 for v in deg.values() if v == 1)
