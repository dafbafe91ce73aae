"""Parsing and serialisation: edge lists, JSON, and DOT.

Edge-list format: one ``u v`` pair per line, ``#`` starts a comment, blank
lines are ignored. A line holding a single id declares an isolated vertex,
which is how ``K_1`` is written. Input ids may be any non-negative integers;
they are remapped to dense ids in increasing order and the originals are kept
in ``graph.labels``.
"""

from __future__ import annotations

import json
from typing import Literal

from .errors import ParseError, TreeCoverError
from .graph import Graph, SubtreeCover, Tree

Want = Literal["auto", "tree", "graph"]
Format = Literal["edge-list", "json", "dot"]

_PALETTE = (
    "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta",
    "cyan4", "gold3", "gray40", "navy", "olivedrab",
)


def _find(parent: dict[int, int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _build(
    raw_edges: list[tuple[int, int, int]],
    raw_vertices: list[tuple[int, int]],
    want: Want,
) -> Graph:
    """Validate and remap parsed ``(u, v, line)`` triples."""
    first_line: dict[int, int] = {}
    for v, line in raw_vertices:
        first_line.setdefault(v, line)
    seen: set[tuple[int, int]] = set()
    for u, v, line in raw_edges:
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", line)
        seen.add(key)
        first_line.setdefault(u, line)
        first_line.setdefault(v, line)
    if not first_line:
        raise ParseError("no vertices in input")
    labels = sorted(first_line)
    dense = {g: i for i, g in enumerate(labels)}
    edges = [(dense[u], dense[v]) for u, v, _ in raw_edges]
    n = len(labels)
    keep_labels = None if labels == list(range(n)) else labels

    # Union-find pass to locate the first cycle or the disconnection.
    uf = {v: v for v in range(n)}
    cycle_line = None
    for (u, v), (_, _, line) in zip(edges, raw_edges):
        a, b = _find(uf, u), _find(uf, v)
        if a == b:
            cycle_line = line
            break
        uf[a] = b
    is_tree = cycle_line is None and len(edges) == n - 1

    if want == "graph" or (want == "auto" and not is_tree):
        return Graph(n, edges, labels=keep_labels)
    if cycle_line is not None:
        raise ParseError("edge closes a cycle, input is not a tree", cycle_line)
    if not is_tree:
        root0 = _find(uf, 0)
        stray = min((v for v in range(n) if _find(uf, v) != root0), default=0)
        raise ParseError(
            f"input is disconnected: vertex {labels[stray]} is not joined to vertex {labels[0]}",
            first_line[labels[stray]],
        )
    return Tree(n, edges, labels=keep_labels)


def parse_edge_list(text: str, want: Want = "auto") -> Graph:
    """Parse the edge-list format into a ``Tree`` (when it is one) or a ``Graph``."""
    raw_edges: list[tuple[int, int, int]] = []
    raw_vertices: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) > 2:
            raise ParseError(f"expected 'u v', got {body!r}", lineno)
        try:
            ids = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"non-integer vertex id in {body!r}", lineno) from None
        if any(i < 0 for i in ids):
            raise ParseError(f"negative vertex id in {body!r}", lineno)
        if len(ids) == 1:
            raw_vertices.append((ids[0], lineno))
        else:
            raw_edges.append((ids[0], ids[1], lineno))
    return _build(raw_edges, raw_vertices, want)


def parse_json(text: str, want: Want = "auto") -> tuple[Graph, int | None]:
    """Parse ``{"n": int, "edges": [[u, v], ...], "root": int | null}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "edges" not in data:
        raise ParseError("JSON graph must be an object with an 'edges' key")
    edges = data["edges"]
    n = data.get("n")
    raw_edges = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ParseError(f"edge #{i} is not a pair of integers: {e!r}")
        if min(e) < 0:
            raise ParseError(f"edge #{i} has a negative id")
        raw_edges.append((e[0], e[1], i + 1))
    raw_vertices = []
    if n is not None:
        if not isinstance(n, int) or n < 1:
            raise ParseError("'n' must be a positive integer")
        if any(max(u, v) >= n for u, v, _ in raw_edges):
            raise ParseError("edge endpoint outside 0..n-1")
        raw_vertices = [(v, 0) for v in range(n)]
    graph = _build(raw_edges, raw_vertices, want)
    root = data.get("root")
    if root is not None and not (isinstance(root, int) and 0 <= root < graph.n):
        raise ParseError(f"root {root!r} is not a vertex")
    return graph, root


def load(text: str, want: Want = "auto") -> tuple[Graph, int | None]:
    """Parse either format, detecting JSON by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text, want)
    return parse_edge_list(text, want), None


def serialize(
    graph: Graph,
    fmt: Format = "edge-list",
    *,
    root: int | None = None,
    cover: SubtreeCover | None = None,
) -> str:
    """Render a graph (optionally with a root or a cover) as text."""
    if fmt == "edge-list":
        if graph.m == 0:
            return "\n".join(str(v) for v in range(graph.n))
        lines = [f"{u} {v}" for u, v in graph.edges]
        # Isolated vertices still need to be declared.
        lines += [str(v) for v in range(graph.n) if not graph.adj[v]]
        return "\n".join(lines)
    if fmt == "json":
        return json.dumps({"n": graph.n, "edges": [list(e) for e in graph.edges], "root": root})
    if fmt == "dot":
        return _to_dot(graph, root, cover)
    raise TreeCoverError(f"unknown format {fmt!r}")


def _to_dot(graph: Graph, root: int | None, cover: SubtreeCover | None) -> str:
    out = ["graph G {"]
    for v in range(graph.n):
        attrs = " [shape=doublecircle]" if v == root else ""
        out.append(f"  {v}{attrs};")
    if cover is None:
        out += [f"  {u} -- {v};" for u, v in graph.edges]
    else:
        for i, part in enumerate(cover.parts):
            color = _PALETTE[i % len(_PALETTE)]
            for e in part:
                u, v = graph.edges[e]
                out.append(f'  {u} -- {v} [color={color}, label="{i}"];')
    out.append("}")
    return "\n".join(out)


def cover_to_dict(cover: SubtreeCover) -> dict[str, object]:
    out: dict[str, object] = {"d": cover.d, "kind": cover.kind, "parts": [list(p) for p in cover.parts]}
    if cover.rooted_at is not None:
        out["root"] = cover.rooted_at
    return out


def cover_to_json(cover: SubtreeCover, **extra: object) -> str:
    data = cover_to_dict(cover)
    data.update(extra)
    return json.dumps(data)


def cover_from_json(text: str, host: Graph) -> SubtreeCover:
    """Read cover JSON written by :func:`cover_to_json` against its host."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "parts" not in data:
        raise ParseError("cover JSON must be an object with a 'parts' key")
    kind = data.get("kind", "covering")
    if kind not in ("partition", "covering"):
        raise ParseError(f"unknown cover kind {kind!r}")
    parts = data["parts"]
    if not isinstance(parts, list) or not all(
        isinstance(p, list) and all(isinstance(e, int) for e in p) for p in parts
    ):
        raise ParseError("'parts' must be a list of lists of edge ids")
    d = data.get("d")
    root = data.get("root")
    # Keep duplicates within a part visible to validation.
    return SubtreeCover(host.m, tuple(tuple(p) for p in parts), kind, root, d)
