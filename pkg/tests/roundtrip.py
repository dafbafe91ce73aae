"""Every solving subcommand piped into ``verify`` over a grid of generated hosts."""

from __future__ import annotations

import json
from pathlib import Path

import networkx as nx

from conftest import run_cli
from treecover.io import load

TREE_FAMILIES: list[list[str]] = [
    ["--family", "path", "--n", "7"],
    ["--family", "star", "--leaves", "6"],
    ["--family", "spider", "--legs", "3,1,2,2"],
    ["--family", "caterpillar", "--legs", "4,0,3,5"],
    ["--family", "double-star", "--a", "3", "--b", "2"],
    ["--family", "complete", "--delta", "3", "--height", "2"],
    ["--family", "complete-rooted", "--delta", "4", "--height", "2"],
    ["--family", "caterpillar-lb", "--delta", "5", "--n", "9"],
    ["--family", "pw-lb-rooted", "--delta", "4", "--d", "3", "--k", "1"],
    ["--family", "pw-lb-unrooted", "--delta", "4", "--d", "3", "--k", "1", "--n", "4"],
    ["--family", "subdivided-star-lb", "--p", "3", "--leg", "1"],
] + [["--family", "random", "--n", str(n), "--seed", str(s)] for n, s in ((2, 0), (15, 1), (60, 2), (200, 3))]

GRAPH_FAMILIES: list[list[str]] = [
    ["--family", "arms", "--k", "2"],
    ["--family", "random-graph", "--n", "30", "--p", "0.2", "--seed", "5"],
    ["--family", "random-graph", "--n", "12", "--p", "0.7", "--seed", "6"],
]


def _solve_and_verify(host: Path, solve: list[str], verify: list[str], out: Path) -> str | None:
    code, text, err = run_cli(solve)
    if code != 0:
        return f"{' '.join(solve)} exited {code}: {err.strip()}"
    out.write_text(text)
    size = json.loads(text)["size"]
    code, _, err = run_cli(["verify", host, out, "--size", size, *verify])
    if code != 0:
        return f"{' '.join(map(str, solve))} failed verify: {err.strip()}"
    return None


def round_trip_failures(tmp: Path) -> tuple[int, list[str]]:
    """Run the grid; returns ``(checks run, failure messages)``."""
    failures: list[str] = []
    checks = 0
    out = tmp / "cover.json"
    for i, fam in enumerate(TREE_FAMILIES):
        code, text, err = run_cli(["gen", *fam])
        assert code == 0, err
        host = tmp / f"tree{i}.txt"
        host.write_text(text)
        nleaves = json.loads(run_cli(["analyze", host, "--json"])[1])["leaves"]
        jobs: list[tuple[list[str], list[str]]] = []
        for d in (2, 3):
            jobs.append((["partition", host, "--d", d], ["--d", d, "--kind", "partition"]))
            jobs.append((["cover", host, "--d", d], ["--d", d, "--kind", "covering"]))
            jobs.append((["cover", host, "--d", d, "--rooted", 0], ["--d", d, "--rooted", 0]))
        binding = tmp / "binding.json"
        binding.write_text(json.dumps({"0": 4}))
        jobs.append((["cover", host, "--d", 2, "--binding", binding], ["--d", 2, "--binding", binding]))
        jobs.append((["paths", host], ["--d", 2]))
        if nleaves % 2 == 0:
            jobs.append((["paths", host, "--even-optimal"], ["--d", 2]))
        for d in (3, 4):
            jobs.append((["cover-pw", host, "--d", d], ["--d", d]))
            jobs.append((["cover-pw", host, "--d", d, "--rooted", 0], ["--d", d, "--rooted", 0]))
        for solve, verify in jobs:
            checks += 1
            msg = _solve_and_verify(host, [str(x) for x in solve], [str(x) for x in verify], out)
            if msg:
                failures.append(f"[{' '.join(fam)}] {msg}")
    for i, fam in enumerate(GRAPH_FAMILIES):
        code, text, err = run_cli(["gen", *fam])
        assert code == 0, err
        host = tmp / f"graph{i}.txt"
        host.write_text(text)
        graph, _ = load(text, "graph")
        lab = graph.labels or list(range(graph.n))
        g = nx.Graph()
        g.add_nodes_from(lab)
        g.add_edges_from((lab[u], lab[v]) for u, v in graph.edges)
        if not nx.is_connected(g):
            continue  # spanning covers need a connected host
        span = nx.bfs_tree(g, min(g.nodes)).to_undirected()
        h = tmp / "h.txt"
        h.write_text("".join(f"{u} {v}\n" for u, v in span.edges))
        dh = max(dict(span.degree()).values())
        for d in (dh + 1, dh + 2):
            checks += 1
            msg = _solve_and_verify(host, ["graph-cover", str(host), "--d", str(d), "--spanning", str(h)],
                                    ["--d", str(d)], out)
            if msg:
                failures.append(f"[{' '.join(fam)}] {msg}")
    return checks, failures
