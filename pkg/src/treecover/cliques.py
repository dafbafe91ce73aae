"""Partitions of complete multipartite graphs into bounded-size cliques.

A vertex is a ``(class, index)`` pair. In a complete multipartite graph a
clique is exactly a set holding at most one vertex per class.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ._exact import ceil_div
from .errors import PreconditionError

Vertex = tuple[int, int]


@dataclass(frozen=True)
class CliquePartition:
    class_sizes: tuple[int, ...]
    cliques: tuple[tuple[Vertex, ...], ...]
    caps: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cliques)

    @property
    def size(self) -> int:
        return len(self.cliques)

    def problems(self) -> list[str]:
        """Ways the partition is invalid; empty when valid."""
        out = []
        seen: set[Vertex] = set()
        for i, (clique, cap) in enumerate(zip(self.cliques, self.caps)):
            if len(clique) > cap:
                out.append(f"clique {i} has {len(clique)} vertices, cap {cap}")
            classes = [c for c, _ in clique]
            if len(set(classes)) != len(classes):
                out.append(f"clique {i} repeats a class")
            for v in clique:
                c, j = v
                if not (0 <= c < len(self.class_sizes) and 0 <= j < self.class_sizes[c]):
                    out.append(f"clique {i} has unknown vertex {v}")
                if v in seen:
                    out.append(f"vertex {v} is in two cliques")
                seen.add(v)
        if len(seen) != sum(self.class_sizes):
            out.append("not every vertex is covered")
        return out


def cliques_bound(class_sizes: Sequence[int], d: int) -> int:
    """``max(max n_i, ceil(sum n_i / d))``, the minimum number of ``(<= d)``-cliques."""
    return max(max(class_sizes, default=0), ceil_div(sum(class_sizes), d))


def _greedy(sizes: list[int], d: int, rounds: int | None) -> tuple[list[list[Vertex]], list[int]]:
    """Take one vertex from each of the ``d`` largest classes, ``rounds`` times or until empty.

    Ties go to the lower class index and each class is used in index order.
    Mutates ``sizes`` into the remaining class sizes; returns the cliques and
    the next unused index per class.
    """
    k = len(sizes)
    nxt = [0] * k
    out: list[list[Vertex]] = []
    while (rounds is None and any(sizes)) or (rounds is not None and len(out) < rounds):
        pick = sorted((i for i in range(k) if sizes[i] > 0), key=lambda i: (-sizes[i], i))[:d]
        clique = []
        for i in sorted(pick):
            clique.append((i, nxt[i]))
            nxt[i] += 1
            sizes[i] -= 1
        out.append(clique)
    return out, nxt


def cliques_partition(class_sizes: Sequence[int], d: int) -> CliquePartition:
    """A minimum partition of ``K<n_1..n_k>`` into cliques of at most ``d`` vertices."""
    sizes = [int(s) for s in class_sizes]
    k = len(sizes)
    if k < 1:
        raise PreconditionError("need at least one class")
    if any(s < 0 for s in sizes):
        raise PreconditionError("class sizes must be non-negative")
    if not 1 <= d <= k:
        raise PreconditionError(f"need 1 <= d <= k, got d={d}, k={k}")
    cliques, _ = _greedy(list(sizes), d, None)
    result = CliquePartition(
        tuple(sizes), tuple(tuple(c) for c in cliques), (d,) * len(cliques)
    )
    if len(result) != cliques_bound(sizes, d):
        raise AssertionError("greedy clique partition is not minimum")
    return result


def turan_sizes(n: int, k: int) -> list[int]:
    """Class sizes of the Turán graph: ``k - y`` classes of ``x`` then ``y`` of ``x + 1``."""
    if k < 1 or n < 0:
        raise PreconditionError("need k >= 1 and n >= 0")
    x, y = divmod(n, k)
    return [x] * (k - y) + [x + 1] * y


def turan_partition(n: int, k: int, d: int) -> CliquePartition:
    """``ceil(n/d)`` cliques of at most ``d`` vertices partitioning ``K<n;k>``."""
    if n < 1:
        raise PreconditionError("n must be positive")
    if not 1 <= d <= k:
        raise PreconditionError(f"need 1 <= d <= k, got d={d}, k={k}")
    result = cliques_partition(turan_sizes(n, k), d)
    if len(result) != ceil_div(n, d):
        raise AssertionError("Turán partition has the wrong size")
    return result


def two_size_partition(n: int, k: int, p: int, q: int, m: int) -> CliquePartition:
    """``m`` cliques capped at ``p`` followed by ``ceil(max(n - mp, 0)/q)`` capped at ``q``.

    The graph is ``K<n;k>``. The ``p``-capped cliques come first and are
    peeled from the ``p`` largest classes; some may be empty when ``n < mp``.
    """
    if n < 1 or k < 1:
        raise PreconditionError("need n, k >= 1")
    if not (0 <= p <= k and 0 <= q <= k and m >= 0):
        raise PreconditionError("need 0 <= p, q <= k and m >= 0")
    sizes = turan_sizes(n, k)
    left = max(n - m * p, 0)
    if left and q == 0:
        raise PreconditionError("q = 0 leaves vertices uncovered")
    if m and n <= p:
        # Every class has at most one vertex: one clique takes them all.
        first = [tuple((i, 0) for i in range(k) if sizes[i])]
        cliques = first + [()] * (m - 1)
        return CliquePartition(tuple(sizes), tuple(cliques), (p,) * m)
    work = list(sizes)
    small, nxt = _greedy(work, p, m) if p else ([[] for _ in range(m)], [0] * k)
    # The remainder is again balanced; partition it into q-cliques.
    big_rounds = ceil_div(left, q) if left else 0
    big, _ = _greedy(list(work), q, None) if left else ([], None)
    big = [[(c, j + nxt[c]) for c, j in cl] for cl in big]
    if len(big) != big_rounds:
        raise AssertionError("q-capped remainder is not minimum")
    result = CliquePartition(
        tuple(sizes),
        tuple(tuple(c) for c in small + big),
        (p,) * m + (q,) * len(big),
    )
    if result.problems():
        raise AssertionError("; ".join(result.problems()))
    return result
