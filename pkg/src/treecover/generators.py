"""Tree and graph families used throughout the package and its tests.

The families that grow exponentially check their size against a vertex limit
(default ``10**7``), configurable through ``TREECOVER_VERTEX_LIMIT``.
"""

from __future__ import annotations

import os
from collections.abc import Sequence

import numpy as np

from .errors import PreconditionError, TreeCoverError
from .graph import Graph, RootedTree, Tree

DEFAULT_VERTEX_LIMIT = 10**7


def vertex_limit() -> int:
    raw = os.environ.get("TREECOVER_VERTEX_LIMIT")
    if raw is None:
        return DEFAULT_VERTEX_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise TreeCoverError(f"TREECOVER_VERTEX_LIMIT must be an integer, got {raw!r}") from None


def _check_size(count: int, what: str) -> None:
    limit = vertex_limit()
    if count > limit:
        raise TreeCoverError(f"{what} would have {count} vertices, above the limit {limit}")


# -- simple families -------------------------------------------------------


def gen_path(n: int) -> Tree:
    if n < 1:
        raise PreconditionError("a path needs at least one vertex")
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def gen_star(leaves: int) -> Tree:
    """``K_{1,leaves}`` with the center at vertex 0."""
    if leaves < 0:
        raise PreconditionError("leaf count must be non-negative")
    return Tree(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_spider(legs: Sequence[int]) -> Tree:
    """A center (vertex 0) with one path of the given length per leg."""
    edges: list[tuple[int, int]] = []
    nxt = 1
    for length in legs:
        if length < 1:
            raise PreconditionError("spider legs need length >= 1")
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, edges)


def gen_caterpillar(leaves_per_spine: Sequence[int]) -> Tree:
    """Spine ``0..s-1`` with the given number of pendant leaves on each spine vertex."""
    s = len(leaves_per_spine)
    if s < 1:
        raise PreconditionError("caterpillar needs a spine vertex")
    edges = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for i, k in enumerate(leaves_per_spine):
        for _ in range(k):
            edges.append((i, nxt))
            nxt += 1
    return Tree(nxt, edges)


def gen_double_star(a: int, b: int) -> Tree:
    """Adjacent centers 0 and 1 with ``a`` and ``b`` leaves."""
    edges = [(0, 1)]
    nxt = 2
    for c, k in ((0, a), (1, b)):
        for _ in range(k):
            edges.append((c, nxt))
            nxt += 1
    return Tree(nxt, edges)


def random_tree(n: int, seed: int | None = None) -> Tree:
    """Uniformly random labelled tree on ``n`` vertices (Prüfer decoding)."""
    if n < 1:
        raise PreconditionError("n must be positive")
    _check_size(n, "random tree")
    if n == 1:
        return Tree(1, [])
    if n == 2:
        return Tree(2, [(0, 1)])
    seq = np.random.default_rng(seed).integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges: list[tuple[int, int]] = []
    ptr = degree.index(1)
    leaf = ptr
    for v in seq:
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return Tree(n, edges)


def random_graph(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdős–Rényi ``G(n, p)``."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph(n, list(zip(iu[keep].tolist(), ju[keep].tolist())))


# -- complete trees --------------------------------------------------------


def gen_complete_rooted(delta: int, h: int) -> RootedTree:
    """Complete ``delta``-ary rooted tree of height ``h``, rooted at 0."""
    if delta < 1 or h < 0:
        raise PreconditionError("need delta >= 1 and h >= 0")
    _check_size(sum(delta**i for i in range(h + 1)), "complete rooted tree")
    edges: list[tuple[int, int]] = []
    level = [0]
    nxt = 1
    for _ in range(h):
        new = []
        for v in level:
            for _ in range(delta):
                edges.append((v, nxt))
                new.append(nxt)
                nxt += 1
        level = new
    return RootedTree(Tree(nxt, edges), 0)


def gen_complete_unrooted(delta: int, h: int) -> Tree:
    """Every non-leaf has degree ``delta``; all leaves at distance ``h`` from vertex 0."""
    if delta < 2 or h < 0:
        raise PreconditionError("need delta >= 2 and h >= 0")
    if h == 0:
        return Tree(1, [])
    _check_size(1 + sum(delta * (delta - 1) ** i for i in range(h)), "complete tree")
    edges: list[tuple[int, int]] = []
    level = [0]
    nxt = 1
    for depth in range(h):
        new = []
        fan = delta if depth == 0 else delta - 1
        for v in level:
            for _ in range(fan):
                edges.append((v, nxt))
                new.append(nxt)
                nxt += 1
        level = new
    return Tree(nxt, edges)


# -- lower-bound families --------------------------------------------------


def gen_caterpillar_lb(delta: int, n: int) -> Tree:
    """Spine ``u, v_1..v_n, w`` (ids ``0..n+1``); each ``v_i`` gets ``delta-2`` leaves."""
    if delta < 3 or n < 1:
        raise PreconditionError("need delta >= 3 and n >= 1")
    edges = [(i, i + 1) for i in range(n + 1)]
    nxt = n + 2
    for i in range(1, n + 1):
        for _ in range(delta - 2):
            edges.append((i, nxt))
            nxt += 1
    return Tree(nxt, edges)


def pw_lb_min_lengths(delta: int, d: int, k: int) -> list[int]:
    """Smallest admissible ``n_i = pi(delta, d, i) + 1`` for ``i = 1..k``."""
    from .pathwidth import pi_recurrence

    return [pi_recurrence(delta, d, i) + 1 for i in range(1, k + 1)]


def _pw_lb_size(delta: int, n_list: Sequence[int]) -> int:
    size = 1
    for n in n_list:
        size = (2 * n + 1) + ((delta - 2) + 2 * n * (delta - 1)) * size
    return size


def _attach_pw_lb(
    edges: list[tuple[int, int]], start: int, delta: int, n_list: Sequence[int]
) -> int:
    """Append a copy of the recursive tree; its root is ``start``. Returns next free id."""
    if not n_list:
        return start + 1
    n = n_list[-1]
    inner = n_list[:-1]
    # v_0 = start, v_1..v_n = start+1..start+n, v_-1..v_-n = start+n+1..start+2n
    pos = [start + i for i in range(1, n + 1)]
    neg = [start + n + i for i in range(1, n + 1)]
    prev = start
    for v in pos:
        edges.append((prev, v))
        prev = v
    prev = start
    for v in neg:
        edges.append((prev, v))
        prev = v
    nxt = start + 2 * n + 1
    for v, copies in [(start, delta - 2)] + [(v, delta - 1) for v in pos + neg]:
        for _ in range(copies):
            edges.append((v, nxt))
            nxt = _attach_pw_lb(edges, nxt, delta, inner)
    return nxt


def gen_pw_lb_rooted(
    delta: int, d: int, k: int, n_list: Sequence[int] | None = None
) -> RootedTree:
    """The recursive lower-bound tree ``T<n_1..n_k>`` for rooted pathwidth coverings.

    Rooted at ``v_0`` (vertex 0), which has outdegree ``delta``. When ``n_list``
    is omitted the smallest admissible lengths are used.
    """
    if not delta >= d >= 3 or k < 1:
        raise PreconditionError("need delta >= d >= 3 and k >= 1")
    need = pw_lb_min_lengths(delta, d, k)
    if n_list is None:
        n_list = need
    n_list = list(n_list)
    if len(n_list) != k:
        raise PreconditionError(f"n_list must have length k={k}")
    for i, (got, lo) in enumerate(zip(n_list, need), start=1):
        if got < lo:
            raise PreconditionError(f"n_{i} = {got} is below the required pi(Δ,d,{i}) + 1 = {lo}")
    _check_size(_pw_lb_size(delta, n_list), "T<n_1..n_k>")
    edges: list[tuple[int, int]] = []
    total = _attach_pw_lb(edges, 0, delta, n_list)
    return RootedTree(Tree(total, edges), 0)


def gen_pw_lb_unrooted(
    delta: int, d: int, k: int, n: int, n_list: Sequence[int] | None = None
) -> Tree:
    """Path ``v_{-n-1}..v_{n+1}``; each ``v_i`` with ``|i| <= n`` gets ``delta-2`` copies of ``X``.

    ``X`` is ``K_1`` for ``k = 1`` and the rooted lower-bound tree for
    ``(delta-1, d-1, k-1)`` otherwise, so every inner path vertex has degree
    ``delta``. Path vertices are ``0..2n+2`` in order.
    """
    if not delta >= d >= 3 or k < 1 or n < 0:
        raise PreconditionError("need delta >= d >= 3, k >= 1, n >= 0")
    if k == 1:
        inner: list[int] = []
    else:
        if d - 1 < 3:
            raise PreconditionError("the inner tree needs d - 1 >= 3 when k >= 2")
        need = pw_lb_min_lengths(delta - 1, d - 1, k - 1)
        inner = list(n_list) if n_list is not None else need
        if len(inner) != k - 1 or any(a < b for a, b in zip(inner, need)):
            raise PreconditionError(f"inner lengths must be >= {need}")
    x_size = _pw_lb_size(delta - 1, inner)
    length = 2 * n + 3
    _check_size(length + (2 * n + 1) * (delta - 2) * x_size, "pathwidth lower-bound tree")
    edges = [(i, i + 1) for i in range(length - 1)]
    nxt = length
    for v in range(1, length - 1):
        for _ in range(delta - 2):
            edges.append((v, nxt))
            nxt = _attach_pw_lb(edges, nxt, delta - 1, inner)
    return Tree(nxt, edges)


def gen_subdivided_star_lb(p: int, leg: int) -> Tree:
    """A ``p``-leg spider with legs of ``leg`` edges, plus two leaves on every leg end."""
    if p < 1 or leg < 1:
        raise PreconditionError("need p >= 1 and leg >= 1")
    base = gen_spider([leg] * p)
    edges = list(base.edges)
    nxt = base.n
    ends = [leg * (i + 1) for i in range(p)]
    for v in ends:
        edges.append((v, nxt))
        edges.append((v, nxt + 1))
        nxt += 2
    return Tree(nxt, edges)


def gen_arms(k: int, m: int | None = None, n: int | None = None) -> Graph:
    """2-connected outerplanar graph of max degree 3 needing many degree-2 parts.

    A cycle ``v_1..v_{2n}`` (ids ``0..2n-1``) with a ladder of ``m`` rungs glued
    on each edge ``v_{2j-1} v_{2j}``. Defaults follow ``m = 2k`` and ``n = 4k``;
    smaller ``m``/``n`` give reduced instances for brute force.
    """
    if k < 1:
        raise PreconditionError("k must be positive")
    m = 2 * k if m is None else m
    n = 4 * k if n is None else n
    if m < 1 or n < 2:
        raise PreconditionError("need m >= 1 and n >= 2")
    cyc = 2 * n
    edges = [(i, (i + 1) % cyc) for i in range(cyc)]
    nxt = cyc
    for j in range(n):
        a_prev, b_prev = 2 * j, 2 * j + 1
        for _ in range(m - 1):
            a, b = nxt, nxt + 1
            nxt += 2
            edges += [(a_prev, a), (b_prev, b), (a, b)]
            a_prev, b_prev = a, b
    return Graph(nxt, edges)
