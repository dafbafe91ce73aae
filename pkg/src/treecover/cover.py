"""Minimum coverings of trees by bounded-degree subtrees.

The rooted problem asks for subtrees that all contain the root, with vertex
``v`` allowed outdegree ``f(v)`` in each. If the children ``v_i`` of the root
need ``c_i`` subtrees, the root needs ``max(max c_i, ceil(sum c_i / f(r)))``:
each root part picks at most ``f(r)`` child parts from distinct children,
which is a clique partition of ``K<c_1..c_k>``. The unrooted problem reduces
to the rooted one at every root with ``f`` lowered by one off the root.

Arithmetic is on Python integers, so there is no overflow; values never
exceed the number of leaves.
"""

from __future__ import annotations

from collections.abc import Callable
from fractions import Fraction

from ._exact import ceil_div, ceil_q
from .cliques import cliques_partition
from .errors import PreconditionError
from .graph import Budget, RootedTree, SubtreeCover, Tree, budget_list, check_cover


def _bfs(tree: Tree, root: int) -> tuple[list[int], list[int], list[int]]:
    """BFS order, parent and parent edge, without building a ``RootedTree``."""
    n = tree.n
    parent = [-2] * n
    pedge = [-1] * n
    parent[root] = -1
    order = [root]
    adj, inc = tree.adj, tree.inc
    for v in order:
        for w, e in zip(adj[v], inc[v]):
            if parent[w] == -2:
                parent[w] = v
                pedge[w] = e
                order.append(w)
    return order, parent, pedge


def _rmc_at(tree: Tree, root: int, caps: list[int]) -> int:
    order, parent, _ = _bfs(tree, root)
    n = tree.n
    total = [0] * n
    best = [0] * n
    for v in reversed(order):
        s = total[v]
        c = 1 if s == 0 else max(best[v], -(-s // caps[v]))
        p = parent[v]
        if p >= 0:
            total[p] += c
            if c > best[p]:
                best[p] = c
        else:
            return c
    raise AssertionError("unreachable")


def rmc(rooted: RootedTree, f: Budget) -> int:
    """Minimum size of a rooted covering with outdegree at most ``f(v)`` at each ``v``."""
    caps = budget_list(rooted.tree, f)
    if min(caps) < 1:
        raise PreconditionError("rooted budgets must be at least 1")
    return _rmc_at(rooted.tree, rooted.root, caps)


def rmc_values(rooted: RootedTree, f: Budget) -> list[int]:
    """``rmc`` of the subtree hanging from every vertex."""
    tree = rooted.tree
    caps = budget_list(tree, f)
    if min(caps) < 1:
        raise PreconditionError("rooted budgets must be at least 1")
    out = [0] * tree.n
    for v in reversed(rooted.order):
        kids = rooted.children[v]
        if not kids:
            out[v] = 1
        else:
            cs = [out[c] for c in kids]
            out[v] = max(max(cs), ceil_div(sum(cs), caps[v]))
    return out


def rmc_cover(rooted: RootedTree, f: Budget) -> SubtreeCover:
    """A minimum rooted covering, composed bottom-up through clique partitions.

    ``K_1`` yields the single empty part.
    """
    tree = rooted.tree
    caps = budget_list(tree, f)
    if min(caps) < 1:
        raise PreconditionError("rooted budgets must be at least 1")
    covers: list[list[list[int]] | None] = [None] * tree.n
    for v in reversed(rooted.order):
        kids = rooted.children[v]
        if not kids:
            covers[v] = [[]]
            continue
        child_parts = [covers[c] for c in kids]
        for c in kids:
            covers[c] = None
        sizes = [len(cp) for cp in child_parts]  # type: ignore[arg-type]
        cp_result = cliques_partition(sizes, min(caps[v], len(kids)))
        mine: list[list[int]] = []
        for clique in cp_result.cliques:
            members = [child_parts[i][j] for i, j in clique]  # type: ignore[index]
            # Reuse the largest child part in place; each is consumed once.
            members.sort(key=len, reverse=True)
            part = members[0]
            for other in members[1:]:
                part.extend(other)
            part.extend(rooted.parent_edge[kids[i]] for i, _ in clique)
            mine.append(part)
        covers[v] = mine
    parts = covers[rooted.root]
    assert parts is not None
    cover = SubtreeCover.build(tree, parts, "covering", rooted_at=rooted.root, d=_uniform(caps))
    return check_cover(tree, cover, budget=caps)


def _uniform(caps: list[int]) -> int | None:
    return caps[0] if caps and all(c == caps[0] for c in caps) else None


def _unrooted_caps(tree: Tree, f: Budget) -> list[int]:
    if tree.n < 2:
        raise PreconditionError("the tree must have at least one edge")
    caps = budget_list(tree, f)
    if min(caps) < 2:
        raise PreconditionError("unrooted budgets must be at least 2")
    return caps


def mincover_size(tree: Tree, f: Budget) -> tuple[int, int]:
    """``(size, root)``: the minimum over roots of the rooted problem with ``f - 1`` off the root."""
    caps = _unrooted_caps(tree, f)
    g = [c - 1 for c in caps]
    best, arg = -1, -1
    for r in range(tree.n):
        g[r] = caps[r]
        val = _rmc_at(tree, r, g)
        g[r] = caps[r] - 1
        if best < 0 or val < best:
            best, arg = val, r
    return best, arg


def mincover(tree: Tree, f: Budget) -> tuple[int, SubtreeCover]:
    """Minimum covering by subtrees of degree at most ``f(v)`` at each ``v``.

    All ``n`` roots are evaluated independently; the smallest root attaining
    the minimum supplies the covering.
    """
    size, root = mincover_size(tree, f)
    caps = _unrooted_caps(tree, f)
    g = [c - 1 for c in caps]
    g[root] = caps[root]
    rooted = rmc_cover(RootedTree(tree, root), g)
    cover = SubtreeCover(tree.m, rooted.parts, "covering", None, _uniform(caps), {"root": root})
    check_cover(tree, cover, budget=caps)
    if len(cover) != size:
        raise AssertionError("covering size differs from the computed minimum")
    return size, cover


def mincover_d(tree: Tree, d: int) -> tuple[int, SubtreeCover]:
    return mincover(tree, d)


def ceill(x: Fraction | int, k: int) -> int:
    """Iterated ceiling power: ``1`` at ``k = 0``, else ``ceil(x * ceill(x, k - 1))``."""
    x = Fraction(x)
    if x <= 0:
        raise PreconditionError("ceill needs x > 0")
    if k < 0:
        raise PreconditionError("ceill needs k >= 0")
    out = 1
    for _ in range(k):
        out = ceil_q(x * out)
    return out


def rmc_complete(delta: int, d: int, h: int) -> int:
    """Rooted covering number of the complete ``delta``-ary tree of height ``h``."""
    if not delta >= d >= 1 or h < 0:
        raise PreconditionError("need delta >= d >= 1 and h >= 0")
    return ceill(Fraction(delta, d), h)


def mincover_complete(delta: int, d: int, h: int) -> int:
    """Covering number of the complete unrooted tree of degree ``delta`` and radius ``h``."""
    if not delta >= d >= 2 or h < 1:
        raise PreconditionError("need delta >= d >= 2 and h >= 1")
    return ceil_q(Fraction(delta, d) * ceill(Fraction(delta - 1, d - 1), h - 1))


BudgetFn = Callable[[int], int]


def budget_from(tree: Tree, fn: BudgetFn) -> list[int]:
    return [fn(v) for v in range(tree.n)]
