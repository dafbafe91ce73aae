"""Pathwidth of trees and coverings of bounded-pathwidth trees.

Pathwidth follows the peeling definition: ``K_1`` has pathwidth 0, and a
tree has pathwidth ``k`` when removing the vertices of some path leaves a
forest of pathwidth at most ``k - 1``.

It is computed bottom-up with vertex-separation labels. The label of a
rooted subtree ``T[x]`` is a list of ``(value, critical)`` pairs with
strictly decreasing values. A head ``(k, None)`` means ``T[x]`` has pathwidth
``k`` and a witness path ending at ``x``. A head ``(k, c)`` means every
witness path runs through ``c`` and uses two branches below it, so nothing
above ``c`` can join it. The rest of the label then describes
``T[x] - T[c]``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._exact import ceil_div, ceil_q
from .cliques import cliques_partition, two_size_partition
from .cover import rmc, rmc_cover, mincover_size
from .errors import PreconditionError
from .graph import RootedTree, SubtreeCover, Tree, check_cover, path_edges, reachable
from .ilp import ilp2_split

Label = tuple[tuple[int, int | None], ...]


# -- pathwidth ---------------------------------------------------------------


def _combine(x: int, kids: list[Label]) -> Label:
    if not kids:
        return ((0, None),)
    k = max(lab[0][0] for lab in kids)
    if k == 0:
        return ((1, None),)
    top = [lab for lab in kids if lab[0][0] == k]
    if len(top) >= 3:
        return ((k + 1, None),)
    critical = [lab for lab in top if lab[0][1] is not None]
    if critical:
        if len(top) >= 2:
            return ((k + 1, None),)
        lab = critical[0]
        others = [o for o in kids if o is not lab]
        if len(lab) > 1:
            others.append(lab[1:])
        sub = _combine(x, others)
        if sub[0][0] >= k:
            return ((k + 1, None),)
        return (lab[0],) + sub
    if len(top) == 2:
        return ((k, x),)
    return ((k, None),)


def _labels(tree: Tree, root: int = 0) -> tuple[RootedTree, list[Label]]:
    rt = RootedTree(tree, root)
    labels: list[Label] = [()] * tree.n
    for v in reversed(rt.order):
        labels[v] = _combine(v, [labels[c] for c in rt.children[v]])
    return rt, labels


def pathwidth(tree: Tree) -> int:
    """Exact pathwidth; ``K_1`` has pathwidth 0."""
    if tree.n == 1:
        return 0
    _, labels = _labels(tree)
    return labels[0][0][0]


def _chain(rt: RootedTree, labels: list[Label], start: int) -> list[int]:
    """Walk down from ``start`` while exactly one child keeps the same value."""
    out = [start]
    v = start
    while True:
        k = labels[v][0][0]
        same = [c for c in rt.children[v] if labels[c][0][0] == k]
        if len(same) != 1:
            return out
        v = same[0]
        out.append(v)


def _extend(tree: Tree, path: list[int]) -> list[int]:
    """Extend both ends of ``path`` by a longest path into the rest of the tree."""
    on = set(path)
    for flip in (False, True):
        if flip:
            path.reverse()
        end = path[-1]
        parent = {end: -1}
        frontier = [end]
        last = end
        while frontier:
            nxt = []
            for u in frontier:
                for w in sorted(tree.adj[u]):
                    if w not in parent and w not in on:
                        parent[w] = u
                        nxt.append(w)
            if nxt:
                last = min(nxt)
            frontier = nxt
        tail = []
        while last != end:
            tail.append(last)
            last = parent[last]
        tail.reverse()
        path.extend(tail)
        on.update(tail)
    return path


def peel_path(tree: Tree) -> list[int]:
    """A vertex path ``P`` with ``pathwidth(T - V(P)) <= pathwidth(T) - 1``.

    The witness from the labels is extended at both ends to a maximal path,
    so it always has at least one edge.
    """
    if tree.n < 2:
        raise PreconditionError("peel_path needs a tree with at least one edge")
    rt, labels = _labels(tree)
    k, c = labels[0][0]
    if c is not None:
        left, right = [w for w in rt.children[c] if labels[w][0][0] == k][:2]
        path = _chain(rt, labels, left)[::-1] + [c] + _chain(rt, labels, right)
    else:
        path = _chain(rt, labels, rt.root)
    return _extend(tree, path)


def remainder_pathwidth(tree: Tree, vertices: Sequence[int]) -> int:
    """Pathwidth of the forest ``T - vertices`` (0 when empty)."""
    gone = set(vertices)
    rest = [v for v in range(tree.n) if v not in gone]
    seen: set[int] = set()
    best = 0
    nbrs = [[w for w in tree.adj[v] if w not in gone] for v in range(tree.n)]
    for v in rest:
        if v in seen:
            continue
        comp = reachable(nbrs, v)
        seen.update(comp)
        if len(comp) > 1:
            sub, _, _ = tree.restrict(comp)
            best = max(best, pathwidth(sub))
    return best


@dataclass(frozen=True)
class PeelSubtree:
    """``H = P ∪ Q``: a peel path ``P`` and the path ``Q`` from the root to ``s ∈ P``."""

    path: tuple[int, ...]
    connector: tuple[int, ...]
    junction: int
    edges: tuple[int, ...]


def rooted_peel_subtree(tree: Tree, r: int) -> PeelSubtree:
    """A degree-3 subtree ``H`` through ``r`` whose removal lowers the pathwidth.

    ``r`` has degree 1 or 2 in ``H``, at most one vertex of ``H`` (the
    junction) has degree 3, and if one does then ``r`` has degree 1.
    """
    if not 0 <= r < tree.n:
        raise PreconditionError(f"root {r} is not a vertex")
    path = peel_path(tree)
    on = set(path)
    parent = {r: -1}
    frontier = [r]
    s = r if r in on else -1
    while s < 0:
        nxt = []
        for u in frontier:
            for w in sorted(tree.adj[u]):
                if w not in parent:
                    parent[w] = u
                    nxt.append(w)
        hits = [w for w in nxt if w in on]
        if hits:
            s = min(hits)
        frontier = nxt
    conn = [s]
    while conn[-1] != r:
        conn.append(parent[conn[-1]])
    conn.reverse()
    if len(conn) > 1:
        # a single path through r is preferred when it still lowers the width
        width = pathwidth(tree)
        idx = path.index(s)
        for half in (path[idx:], path[idx::-1]):
            through = conn + half[1:]
            if remainder_pathwidth(tree, through) < width:
                return PeelSubtree(tuple(through), (r,), r, tuple(sorted(path_edges(tree, through))))
    edges = sorted(set(path_edges(tree, path)) | set(path_edges(tree, conn)))
    return PeelSubtree(tuple(path), tuple(conn), s, tuple(edges))


# -- the pi recurrence ----------------------------------------------------------


@lru_cache(maxsize=None)
def pi_recurrence(delta: int, d: int, k: int) -> int:
    """``pi(delta, d, k)``: worst rooted covering number at outdegree ``delta`` and pathwidth ``k``."""
    if d < 3 or delta < d or k < 0:
        raise PreconditionError("need delta >= d >= 3 and k >= 0")
    if k == 0 or delta == d:
        return 1
    p = pi_recurrence(delta, d, k - 1)
    if delta == d + 1:
        x, y = _xy(d, p)
        return x + 2 * y
    lam = ceil_q(Fraction((delta - 1) * p, d - 1))
    return ceil_div((delta - 2) * p + 2 * lam, d)


def _xy(d: int, p: int) -> tuple[int, int]:
    """The split ``(x, y)`` used when ``delta = d + 1``, from ``p = pi(d+1, d, k-1)``."""
    return ilp2_split(p, d)


def pi_estimate(delta: int, d: int, k: int) -> int:
    """``ceil((delta-2)/d + (2/d) ceil((delta-1)/(d-1)))^k``, an upper estimate of ``pi``."""
    if d < 2 or delta < d or k < 0:
        raise PreconditionError("need delta >= d >= 2 and k >= 0")
    base = ceil_q(Fraction(delta - 2, d) + Fraction(2, d) * ceil_div(delta - 1, d - 1))
    return base**k


def pathwidth_cover_bound(delta: int, d: int, k: int, pi: int | None = None) -> int:
    """``t = ceil((delta-2)/(d-2) * pi(delta-1, d-1, k-1))`` for unrooted coverings.

    ``pi`` overrides the inner value; it is required when ``d = 3`` and
    ``k >= 2``, where the recurrence is undefined for ``d - 1 = 2``.
    """
    if not delta >= d >= 3 or k < 0:
        raise PreconditionError("need delta >= d >= 3 and k >= 0")
    if k == 0:
        return 1
    if pi is None:
        if k == 1:
            pi = 1
        elif d - 1 >= 3:
            pi = pi_recurrence(delta - 1, d - 1, k - 1)
        else:
            raise PreconditionError("d = 3 with k >= 2 needs an explicit inner pi")
    return ceil_q(Fraction((delta - 2) * pi, d - 2))


# -- constructions ---------------------------------------------------------------


def _dedup(parts: list[list[int]]) -> list[tuple[int, ...]]:
    seen: set[tuple[int, ...]] = set()
    out = []
    for p in parts:
        key = tuple(sorted(set(p)))
        if key and key not in seen:
            seen.add(key)
            out.append(key)
    return out


def is_caterpillar(tree: Tree) -> bool:
    spine = [v for v in range(tree.n) if tree.degree(v) > 1]
    if len(spine) <= 1:
        return True
    on = set(spine)
    nbrs = {v: [w for w in tree.adj[v] if w in on] for v in spine}
    return all(len(a) <= 2 for a in nbrs.values())


def cover_caterpillar(tree: Tree, d: int) -> SubtreeCover:
    """At most ``ceil((delta-2)/(d-2))`` degree-``d`` subtrees covering a caterpillar.

    Each part is the spine plus one group of leaf edges from every spine
    vertex, a spine vertex ``x`` contributing groups of ``d - deg_P(x)``.
    """
    if d < 3:
        raise PreconditionError("d must be at least 3")
    if not is_caterpillar(tree):
        raise PreconditionError("input is not a caterpillar")
    delta = tree.max_degree()
    if delta <= d:
        return check_cover(tree, SubtreeCover(tree.m, (tuple(range(tree.m)),), "covering", None, d), budget=d)
    spine = {v for v in range(tree.n) if tree.degree(v) > 1}
    spine_edges = [e for e, (a, b) in enumerate(tree.edges) if a in spine and b in spine]
    groups: list[list[int]] = []
    for x in sorted(spine):
        deg_p = sum(1 for w in tree.adj[x] if w in spine)
        leaf_edges = sorted(e for w, e in zip(tree.adj[x], tree.inc[x]) if w not in spine)
        size = d - deg_p
        for i in range(0, len(leaf_edges), size):
            j = i // size
            while len(groups) <= j:
                groups.append([])
            groups[j].extend(leaf_edges[i : i + size])
    parts = _dedup([spine_edges + g for g in groups])
    cover = SubtreeCover(tree.m, tuple(parts), "covering", None, d)
    check_cover(tree, cover, budget=d)
    if len(parts) > ceil_div(delta - 2, d - 2):
        raise AssertionError("caterpillar cover exceeds its bound")
    return cover


def _compose(
    classes: Sequence[tuple[int, Sequence[Sequence[int]]]],
    clique: Sequence[tuple[int, int]],
) -> list[int]:
    """Union of the chosen child parts, each with the edge joining it to the parent.

    Slots beyond a class's real parts, and classes beyond the real children,
    are padding and contribute nothing.
    """
    out: list[int] = []
    for c, j in clique:
        if c < len(classes):
            edge, parts = classes[c]
            if j < len(parts):
                out.append(edge)
                out.extend(parts[j])
    return out


def _greedy_cover(classes: Sequence[tuple[int, Sequence[Sequence[int]]]], cap: int) -> list[list[int]]:
    if not classes:
        return []
    sizes = [len(p) for _, p in classes]
    cp = cliques_partition(sizes, min(cap, len(classes)))
    return [_compose(classes, cl) for cl in cp.cliques]


def _rooted_pw(tree: Tree, root: int, emap: Sequence[int], delta: int, d: int) -> list[list[int]]:
    """Rooted covering of ``tree`` in global edge ids; every part contains ``root``."""
    if tree.n == 1:
        return [[]]
    rt = RootedTree(tree, root)
    if rt.max_outdegree() <= d:
        return [list(emap)]
    k = pathwidth(tree)
    pi = pi_recurrence(delta, d, k - 1)
    peel = rooted_peel_subtree(tree, root)
    in_h = set(peel.path) | set(peel.connector)
    h_edges = [emap[e] for e in peel.edges]

    classes: dict[int, list[tuple[int, list[list[int]]]]] = {}
    out_h: dict[int, int] = {}
    for v in sorted(in_h):
        out_h[v] = sum(1 for c in rt.children[v] if c in in_h)
        cls = []
        for w in rt.children[v]:
            if w in in_h:
                continue
            sub, vmap, semap = tree.restrict(rt.subtree_vertices(w))
            parts = _rooted_pw(sub, vmap.index(w), [emap[e] for e in semap], delta, d)
            if len(parts) > pi:
                raise AssertionError("component cover exceeds pi(delta, d, k-1)")
            cls.append((emap[rt.parent_edge[w]], parts))
        classes[v] = cls

    s = peel.junction
    q_edges = [emap[e] for e in path_edges(tree, peel.connector)]
    parts: list[list[int]] = []
    if delta >= d + 2:
        lam = ceil_q(Fraction((delta - 1) * pi, d - 1))
        c_parts: dict[int, list[list[int]]] = {}
        d_parts: list[list[int]] = []
        for v in sorted(in_h):
            if out_h[v] < 2:
                c_parts[v] = _greedy_cover(classes[v], d - out_h[v])
            else:
                tsp = two_size_partition((delta - 2) * pi, delta - 2, d - 2, d, lam)
                built = [_compose(classes[v], cl) for cl in tsp.cliques]
                c_parts[v], d_parts = built[:lam], built[lam:]
            if len(c_parts[v]) > lam:
                raise AssertionError("C_v exceeds Lambda")
        for i in range(lam):
            part = list(h_edges)
            for v in c_parts:
                if i < len(c_parts[v]):
                    part.extend(c_parts[v][i])
            parts.append(part)
        parts += [q_edges + y for y in d_parts if y]
    else:
        x, y = _xy(d, pi)
        _check_xy(d, pi, x, y)
        idx = peel.path.index(s)
        p1, p2 = list(peel.path[idx::-1]), list(peel.path[idx:])
        if len(p2) == 1:
            p1, p2 = p2, p1
        side = {v: 1 for v in peel.connector}
        side.update({v: 1 for v in p1})
        side.update({v: 2 for v in p2[1:]})
        side[s] = 2
        q_side = {1: q_edges + [emap[e] for e in path_edges(tree, p1)],
                  2: q_edges + [emap[e] for e in path_edges(tree, p2)]}
        c_parts = {}
        d_split: dict[int, list[list[list[int]]]] = {1: [], 2: []}
        for v in sorted(in_h):
            if out_h[v] < 2:
                built = _greedy_cover(classes[v], d - out_h[v])
                if len(built) > x + y:
                    raise AssertionError("vertex cover exceeds x + y")
                c_parts[v] = built[:x]
                d_split[side[v]].append(built[x:])
            else:
                tsp = two_size_partition((d - 1) * pi, d - 1, d - 1, d - 2, 2 * y)
                built = [_compose(classes[v], cl) for cl in tsp.cliques]
                d_split[1].append(built[:y])
                d_split[2].append(built[y : 2 * y])
                c_parts[v] = built[2 * y :]
                if len(c_parts[v]) > x:
                    raise AssertionError("C_s exceeds x")
        for j in range(max(x, 1)):
            part = list(h_edges)
            for v in c_parts:
                if j < len(c_parts[v]):
                    part.extend(c_parts[v][j])
            parts.append(part)
        for i in (1, 2):
            for j in range(y):
                extra: list[int] = []
                for lst in d_split[i]:
                    if j < len(lst):
                        extra.extend(lst[j])
                if extra:
                    parts.append(q_side[i] + extra)
    out = [list(p) for p in _dedup(parts)]
    if len(out) > pi_recurrence(delta, d, k):
        raise AssertionError("rooted pathwidth cover exceeds pi(delta, d, k)")
    return out


def _check_xy(d: int, pi: int, x: int, y: int) -> None:
    delta = d + 1
    ok = (
        (d - 2) * x + 2 * (d - 1) * y >= (delta - 2) * pi
        and (d - 1) * (x + y) >= (delta - 1) * pi
        and d * (x + y) > delta * pi
        and (d - 1) * pi + d - 2 > 2 * y * (d - 1)
    )
    if not ok:
        raise AssertionError(f"x={x}, y={y} violate the split inequalities for d={d}, pi={pi}")


def cover_rooted_pw(rooted: RootedTree, d: int, delta: int | None = None) -> SubtreeCover:
    """Outdegree-``d`` rooted covering with at most ``pi(delta, d, k)`` parts.

    ``delta`` defaults to the maximum outdegree and ``k`` is the pathwidth.
    """
    if d < 3:
        raise PreconditionError("d must be at least 3")
    tree = rooted.tree
    out_max = rooted.max_outdegree()
    if delta is None:
        delta = max(out_max, d)
    if delta < out_max:
        raise PreconditionError(f"delta={delta} is below the maximum outdegree {out_max}")
    parts = _rooted_pw(tree, rooted.root, list(range(tree.m)), delta, d)
    cover = SubtreeCover.build(tree, parts, "covering", rooted_at=rooted.root, d=d)
    if tree.m == 0:
        cover = SubtreeCover(0, ((),), "covering", rooted.root, d)
    cover.meta.update(delta=delta, k=pathwidth(tree))
    return check_cover(tree, cover, budget=d)


def instance_inner_pi(tree: Tree, path: Sequence[int], d: int) -> int:
    """Largest ``rmc`` with budget ``d - 1`` over components of ``T - V(path)``, rooted at their attachment."""
    on = set(path)
    nbrs = [[u for u in tree.adj[x] if u not in on] for x in range(tree.n)]
    best = 1
    for v in path:
        for w in tree.adj[v]:
            if w in on:
                continue
            comp = reachable(nbrs, w)
            sub, vmap, _ = tree.restrict(comp)
            best = max(best, rmc(RootedTree(sub, vmap.index(w)), d - 1))
    return best


def cover_unrooted_pw(tree: Tree, d: int) -> SubtreeCover:
    """Degree-``d`` covering with at most ``ceil((delta-2)/(d-2) * pi(delta-1, d-1, k-1))`` parts.

    Every part is the peel path ``P`` plus the ``i``-th subtree of a rooted
    covering of each piece hanging off ``P``, with budget ``d - deg_P(v)`` at
    its root ``v`` and ``d - 1`` elsewhere.
    """
    if d < 3:
        raise PreconditionError("d must be at least 3")
    delta = tree.max_degree()
    if delta <= d:
        cover = SubtreeCover(tree.m, (tuple(range(tree.m)),), "covering", None, d)
        cover.meta.update(bound=1, k=pathwidth(tree))
        return check_cover(tree, cover, budget=d)
    path = peel_path(tree)
    p_edges = path_edges(tree, path)
    p_set = set(p_edges)
    nbrs = [[w for w, e in zip(tree.adj[x], tree.inc[x]) if e not in p_set] for x in range(tree.n)]
    pieces: dict[int, list[list[int]]] = {}
    for i, v in enumerate(path):
        comp = reachable(nbrs, v)
        if len(comp) == 1:
            pieces[v] = []
            continue
        sub, vmap, semap = tree.restrict(comp)
        deg_p = (i > 0) + (i < len(path) - 1)
        root = vmap.index(v)
        budget = [d - 1] * sub.n
        budget[root] = d - deg_p
        c = rmc_cover(RootedTree(sub, root), budget)
        pieces[v] = [[semap[e] for e in part] for part in c.parts]
    width = max((len(p) for p in pieces.values()), default=0)
    parts = []
    for i in range(max(width, 1)):
        part = list(p_edges)
        for v in path:
            if i < len(pieces[v]):
                part.extend(pieces[v][i])
        parts.append(part)
    out = _dedup(parts)
    k = pathwidth(tree)
    inner = None
    if d == 3 and k >= 2:
        inner = instance_inner_pi(tree, path, d)
    bound = pathwidth_cover_bound(delta, d, k, inner)
    cover = SubtreeCover(tree.m, tuple(out), "covering", None, d, {"bound": bound, "k": k})
    check_cover(tree, cover, budget=d)
    if len(out) > bound:
        raise AssertionError(f"unrooted pathwidth cover has {len(out)} parts, bound {bound}")
    return cover


@dataclass(frozen=True)
class PathwidthVsCover:
    holds: bool
    pathwidth: int
    mincover3: int


def pw_upper_via_cover(tree: Tree) -> PathwidthVsCover:
    """Compare pathwidth with the degree-3 covering number when internal degrees are >= 4."""
    if tree.n < 2:
        raise PreconditionError("the tree must have at least one edge")
    bad = [v for v in range(tree.n) if 1 < tree.degree(v) < 4]
    if bad:
        raise PreconditionError(f"non-leaf vertices of degree 2 or 3: {bad[:10]}")
    pw = pathwidth(tree)
    mc, _ = mincover_size(tree, 3)
    result = PathwidthVsCover(pw <= mc, pw, mc)
    if not result.holds:
        raise AssertionError(f"pathwidth {pw} exceeds the degree-3 covering number {mc}")
    return result
