"""Command-line entry point.

Every solving subcommand writes JSON to standard output. Inputs are a file
path or ``-`` for standard input, in edge-list or JSON format. Exit status is
0 on success, 1 on a domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from . import generators as gen
from .cliques import CliquePartition, cliques_partition, turan_partition, two_size_partition
from .cover import mincover, mincover_size, rmc, rmc_cover
from .errors import TreeCoverError
from .graph import Graph, RootedTree, SubtreeCover, Tree, cover_problems
from .graphcover import cover_via_cvc, cover_via_spanning
from .ilp import ilp2_min_sum, ilp_min_sum
from .io import cover_from_json, cover_to_dict, load, serialize
from .oracle import (
    oracle_cliques,
    oracle_ilp,
    oracle_mincover,
    oracle_minpart,
    oracle_path_cover,
    oracle_pathwidth,
    oracle_rmc,
    oracle_subgraph_cover,
)
from .partition import minpart_partition, minpart_size
from .paths import centroid_set, cover_few_leaves, min_path_cover, min_path_cover_even
from .pathwidth import cover_rooted_pw, cover_unrooted_pw, pathwidth, pi_recurrence


class UsageError(Exception):
    """Bad flags or unreadable files; mapped to exit status 2."""


# -- input helpers -------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _tree(path: str) -> tuple[Tree, int | None]:
    graph, root = load(_read(path), "tree")
    assert isinstance(graph, Tree)
    return graph, root


def _graph(path: str) -> tuple[Graph, int | None]:
    return load(_read(path), "auto")


def _vertex(graph: Graph, label: int) -> int:
    """Dense id of an input vertex label."""
    if graph.labels is None:
        if not 0 <= label < graph.n:
            raise TreeCoverError(f"vertex {label} does not exist")
        return label
    try:
        return graph.labels.index(label)
    except ValueError:
        raise TreeCoverError(f"vertex {label} does not exist") from None


def _binding(graph: Graph, path: str, default: int | None) -> list[int]:
    """Per-vertex budgets from a JSON map ``{vertex: budget}``; ``default`` fills gaps."""
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise TreeCoverError(f"binding file is not valid JSON: {exc.msg}") from None
    if not isinstance(data, dict):
        raise TreeCoverError("binding file must hold a JSON object")
    caps: list[int | None] = [default] * graph.n
    for key, val in data.items():
        try:
            label = int(key)
        except ValueError:
            raise TreeCoverError(f"binding key {key!r} is not a vertex id") from None
        if not isinstance(val, int):
            raise TreeCoverError(f"budget of vertex {key} must be an integer")
        caps[_vertex(graph, label)] = val
    missing = [v for v, c in enumerate(caps) if c is None]
    if missing:
        raise TreeCoverError(f"no budget for vertices {missing[:5]}; pass --d for a default")
    return [int(c) for c in caps]  # type: ignore[arg-type]


def _budget(args: argparse.Namespace, graph: Graph) -> int | list[int]:
    if args.binding is not None:
        return _binding(graph, args.binding, args.d)
    if args.d is None:
        raise UsageError("one of --d or --binding is required")
    return args.d


def _emit(data: Any) -> None:
    print(json.dumps(data))


def _emit_cover(cover: SubtreeCover, **extra: Any) -> None:
    data = {"size": len(cover), **cover_to_dict(cover)}
    data.update(extra)
    _emit(data)


def _emit_cliques(cp: CliquePartition) -> None:
    _emit({"size": len(cp), "class_sizes": list(cp.class_sizes),
           "cliques": [[list(v) for v in c] for c in cp.cliques]})


# -- subcommands ---------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _need(args: argparse.Namespace, *names: str) -> list[Any]:
    out = []
    for name in names:
        val = getattr(args, name.replace("-", "_"))
        if val is None:
            raise UsageError(f"family {args.family!r} needs --{name}")
        out.append(val)
    return out


FAMILIES = (
    "path", "star", "spider", "caterpillar", "double-star", "random", "random-graph",
    "complete", "complete-rooted", "caterpillar-lb", "pw-lb-rooted", "pw-lb-unrooted",
    "subdivided-star-lb", "arms",
)


def cmd_gen(args: argparse.Namespace) -> None:
    fam = args.family
    root = None
    graph: Graph
    if fam == "path":
        (n,) = _need(args, "n")
        graph = gen.gen_path(n)
    elif fam == "star":
        (leaves,) = _need(args, "leaves")
        graph = gen.gen_star(leaves)
    elif fam == "spider":
        (legs,) = _need(args, "legs")
        graph = gen.gen_spider(legs)
    elif fam == "caterpillar":
        (legs,) = _need(args, "legs")
        graph = gen.gen_caterpillar(legs)
    elif fam == "double-star":
        a, b = _need(args, "a", "b")
        graph = gen.gen_double_star(a, b)
    elif fam == "random":
        (n,) = _need(args, "n")
        graph = gen.random_tree(n, args.seed)
    elif fam == "random-graph":
        n, p = _need(args, "n", "p")
        graph = gen.random_graph(n, p, args.seed)
    elif fam == "complete":
        delta, h = _need(args, "delta", "height")
        graph = gen.gen_complete_unrooted(delta, h)
    elif fam == "complete-rooted":
        delta, h = _need(args, "delta", "height")
        rt = gen.gen_complete_rooted(delta, h)
        graph, root = rt.tree, rt.root
    elif fam == "caterpillar-lb":
        delta, n = _need(args, "delta", "n")
        graph = gen.gen_caterpillar_lb(delta, n)
    elif fam == "pw-lb-rooted":
        delta, d, k = _need(args, "delta", "d", "k")
        rt = gen.gen_pw_lb_rooted(delta, d, k, args.n_list)
        graph, root = rt.tree, rt.root
    elif fam == "pw-lb-unrooted":
        delta, d, k, n = _need(args, "delta", "d", "k", "n")
        graph = gen.gen_pw_lb_unrooted(delta, d, k, n, args.n_list)
    elif fam == "subdivided-star-lb":
        p, leg = _need(args, "p", "leg")
        graph = gen.gen_subdivided_star_lb(int(p), leg)
    else:
        (k,) = _need(args, "k")
        graph = gen.gen_arms(k, args.m, args.n)
    fmt = args.format
    if root is not None and fmt == "edge-list":
        fmt = "json"  # the edge-list format cannot carry a root
    print(serialize(graph, fmt, root=root))


def cmd_analyze(args: argparse.Namespace) -> None:
    tree, _ = _tree(args.input)
    d = args.d
    stats: dict[str, Any] = {
        "n": tree.n,
        "leaves": tree.leaf_count(),
        "max_degree": tree.max_degree(),
        "pathwidth": pathwidth(tree),
        f"minpart_{d}": minpart_size(tree, d) if tree.m else None,
        f"mincover_{d}": mincover_size(tree, d)[0] if tree.m and d >= 2 else None,
    }
    if args.json:
        _emit(stats)
    else:
        for key, val in stats.items():
            print(f"{key}: {'n/a' if val is None else val}")


def cmd_partition(args: argparse.Namespace) -> None:
    tree, _ = _tree(args.input)
    _emit_cover(minpart_partition(tree, args.d))


def cmd_paths(args: argparse.Namespace) -> None:
    tree, _ = _tree(args.input)
    if args.centroids:
        _emit({"centroids": centroid_set(tree)})
    elif args.few_leaves is not None:
        _emit_cover(cover_few_leaves(tree, args.few_leaves))
    else:
        res = min_path_cover_even(tree) if args.even_optimal else min_path_cover(tree)
        extra: dict[str, Any] = {"total_edges": res.total_edges,
                                 "vertex_paths": [list(p) for p in res.vertex_paths]}
        if res.ee_count is not None:
            extra["even_even_edges"] = res.ee_count
        _emit_cover(res.paths, **extra)


def cmd_cover(args: argparse.Namespace) -> None:
    tree, _ = _tree(args.input)
    f = _budget(args, tree)
    if args.rooted is not None:
        cover = rmc_cover(RootedTree(tree, _vertex(tree, args.rooted)), f)
    else:
        _, cover = mincover(tree, f)
    _emit_cover(cover)


def cmd_cover_pw(args: argparse.Namespace) -> None:
    tree, _ = _tree(args.input)
    if args.rooted is not None:
        cover = cover_rooted_pw(RootedTree(tree, _vertex(tree, args.rooted)), args.d, args.delta)
    else:
        cover = cover_unrooted_pw(tree, args.d)
    _emit_cover(cover, **{k: v for k, v in cover.meta.items() if isinstance(v, int)})


def cmd_pathwidth(args: argparse.Namespace) -> None:
    tree, _ = _tree(args.input)
    print(pathwidth(tree))


def cmd_pi(args: argparse.Namespace) -> None:
    print(pi_recurrence(args.delta, args.d, args.k))


def cmd_cliques(args: argparse.Namespace) -> None:
    if args.turan is not None:
        if args.d is None:
            raise UsageError("--turan needs --d")
        n, k = args.turan
        _emit_cliques(turan_partition(n, k, args.d))
    elif args.two_size is not None:
        n, k, p, q, m = args.two_size
        _emit_cliques(two_size_partition(n, k, p, q, m))
    else:
        if not args.sizes or args.d is None:
            raise UsageError("give class sizes and --d, or --turan N K, or --two-size N K P Q M")
        _emit_cliques(cliques_partition(args.sizes, args.d))


def cmd_ilp(args: argparse.Namespace) -> None:
    if args.lemma == 1:
        if args.B is None:
            raise UsageError("--lemma 1 needs --B")
        sol = ilp_min_sum(args.A, args.B, args.d)
    else:
        sol = ilp2_min_sum(args.A, args.d)
    _emit({"value": sol.value, "witness": dict(zip(("x", "y1", "y2", "z"), sol.witness))})


def _h_edges(graph: Graph, path: str) -> list[tuple[int, int]]:
    h, _ = load(_read(path), "graph")
    pairs = []
    for u, v in h.edges:
        if h.labels is not None:
            u, v = h.labels[u], h.labels[v]
        pairs.append((_vertex(graph, u), _vertex(graph, v)))
    return pairs


def cmd_graph_cover(args: argparse.Namespace) -> None:
    graph, _ = _graph(args.input)
    if args.cvc is not None:
        cover = cover_via_cvc(graph, _h_edges(graph, args.cvc), args.d)
    else:
        cover = cover_via_spanning(graph, _h_edges(graph, args.spanning), args.d)
    _emit_cover(cover, k=cover.meta["k"], delta_h=cover.meta["delta_h"])


def cmd_verify(args: argparse.Namespace) -> int:
    graph, _ = _graph(args.host)
    cover = cover_from_json(_read(args.cover), graph)
    if args.rooted is not None:
        cover = SubtreeCover(cover.host_edge_count, cover.parts, cover.kind,
                             _vertex(graph, args.rooted), cover.d)
    budget: int | list[int] | None
    if args.binding is not None:
        budget = _binding(graph, args.binding, args.d)
    else:
        budget = args.d if args.d is not None else cover.d
    problems = cover_problems(graph, cover, budget=budget, kind=args.kind)
    if args.size is not None and len(cover) != args.size:
        problems.append(f"cover has {len(cover)} parts, expected {args.size}")
    if problems:
        for p in problems:
            print(f"invalid: {p}", file=sys.stderr)
        return 1
    print(f"valid: {len(cover)} parts")
    return 0


def cmd_oracle(args: argparse.Namespace) -> None:
    what = args.what
    if what == "cliques":
        if not args.sizes or args.d is None:
            raise UsageError("oracle cliques needs class sizes and --d")
        print(oracle_cliques(args.sizes, args.d))
        return
    if what == "ilp":
        if args.lemma is None or args.A is None or args.d is None:
            raise UsageError("oracle ilp needs --lemma, --A and --d")
        print(oracle_ilp(args.lemma, args.A, args.d, args.B))
        return
    if args.input is None:
        raise UsageError(f"oracle {what} needs an input")
    if what == "subgraph-cover":
        graph, _ = _graph(args.input)
        print(oracle_subgraph_cover(graph, _need_d(args)))
        return
    tree, _ = _tree(args.input)
    if what == "pathwidth":
        print(oracle_pathwidth(tree))
    elif what == "paths":
        count, total = oracle_path_cover(tree)
        _emit({"size": count, "total_edges": total})
    elif what == "minpart":
        print(oracle_minpart(tree, _need_d(args)))
    elif what == "mincover":
        print(oracle_mincover(tree, _need_d(args)))
    else:
        if args.rooted is None:
            raise UsageError("oracle rmc needs --rooted ROOT")
        print(oracle_rmc(RootedTree(tree, _vertex(tree, args.rooted)), _need_d(args)))


def _need_d(args: argparse.Namespace) -> int:
    if args.d is None:
        raise UsageError(f"oracle {args.what} needs --d")
    return int(args.d)


# -- bench ---------------------------------------------------------------------


def _bench_one(job: tuple[str, int, int, int]) -> tuple[int, float, int]:
    op, n, d, seed = job
    tree = gen.random_tree(n, seed)
    ops: dict[str, Callable[[], int]] = {
        "rmc": lambda: rmc(RootedTree(tree, 0), d),
        "mincover": lambda: mincover_size(tree, d)[0],
        "minpart": lambda: len(minpart_partition(tree, d)),
    }
    start = time.perf_counter()
    value = ops[op]()
    return n, time.perf_counter() - start, value


def cmd_bench(args: argparse.Namespace) -> None:
    jobs = [(args.op, n, args.d, args.seed + r) for n in args.sizes for r in range(args.repeat)]
    if args.parallel > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(j) for j in jobs]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "seconds", "value"])
    for n, secs, value in rows:
        writer.writerow([n, f"{secs:.6f}", value])


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecover",
        description="Partitions and coverings of trees by bounded-degree subtrees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a tree or graph family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    for flag in ("n", "leaves", "a", "b", "delta", "height", "d", "k", "m", "leg", "seed"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--p", type=float, help="edge probability (random-graph) or leg count")
    p.add_argument("--legs", type=_int_list, help="comma-separated leg lengths or leaf counts")
    p.add_argument("--n-list", type=_int_list, help="comma-separated path lengths n_1..n_k")
    p.add_argument("--format", choices=("edge-list", "json", "dot"), default="edge-list")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="summary statistics of a tree")
    p.add_argument("input")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("partition", help="minimum partition into degree-d subtrees")
    p.add_argument("input")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("paths", help="path coverings and centroids")
    p.add_argument("input")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--even-optimal", action="store_true",
                      help="edge-optimal cover, trees with an even leaf count only")
    mode.add_argument("--centroids", action="store_true")
    mode.add_argument("--few-leaves", type=int, metavar="D",
                      help="cover by subtrees with at most D leaves")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("cover", help="minimum covering by degree-bounded subtrees")
    p.add_argument("input")
    p.add_argument("--d", type=int)
    p.add_argument("--binding", metavar="FILE", help="JSON map vertex -> budget")
    p.add_argument("--rooted", type=int, metavar="ROOT")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("cover-pw", help="covering built from a pathwidth decomposition")
    p.add_argument("input")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rooted", type=int, metavar="ROOT")
    p.add_argument("--delta", type=int, help="outdegree bound (rooted only)")
    p.set_defaults(func=cmd_cover_pw)

    p = sub.add_parser("pathwidth", help="pathwidth of a tree")
    p.add_argument("input")
    p.set_defaults(func=cmd_pathwidth)

    p = sub.add_parser("pi", help="the rooted pathwidth covering bound")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("cliques", help="clique partitions of complete multipartite graphs")
    p.add_argument("sizes", type=int, nargs="*")
    p.add_argument("--d", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--turan", type=int, nargs=2, metavar=("N", "K"))
    mode.add_argument("--two-size", type=int, nargs=5, metavar=("N", "K", "P", "Q", "M"))
    p.set_defaults(func=cmd_cliques)

    p = sub.add_parser("ilp", help="closed-form integer program minima")
    p.add_argument("--lemma", type=int, choices=(1, 2), required=True)
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_ilp)

    p = sub.add_parser("graph-cover", help="covering of a graph from a connected vertex cover")
    p.add_argument("input")
    p.add_argument("--d", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--cvc", metavar="FILE", help="edge list of a connected vertex cover")
    mode.add_argument("--spanning", metavar="FILE", help="edge list of a connected spanning subgraph")
    p.set_defaults(func=cmd_graph_cover)

    p = sub.add_parser("verify", help="check a cover JSON against its host")
    p.add_argument("host")
    p.add_argument("cover")
    p.add_argument("--d", type=int)
    p.add_argument("--binding", metavar="FILE")
    p.add_argument("--kind", choices=("partition", "covering"))
    p.add_argument("--rooted", type=int, metavar="ROOT")
    p.add_argument("--size", type=int, help="also require exactly this many parts")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force reference values for small inputs")
    p.add_argument("what", choices=("minpart", "mincover", "rmc", "pathwidth", "paths",
                                    "cliques", "ilp", "subgraph-cover"))
    p.add_argument("input", nargs="?")
    p.add_argument("--d", type=int)
    p.add_argument("--rooted", type=int, metavar="ROOT")
    p.add_argument("--sizes", type=_int_list)
    p.add_argument("--lemma", type=int, choices=(1, 2))
    p.add_argument("--A", type=int)
    p.add_argument("--B", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="time a solver on random trees, CSV output")
    p.add_argument("--op", choices=("rmc", "mincover", "minpart"), default="rmc")
    p.add_argument("--sizes", type=_int_list, default=[1000, 10000, 100000])
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--parallel", type=int, default=1, metavar="WORKERS")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = args.func(args)
    except UsageError as exc:
        print(f"treecover: error: {exc}", file=sys.stderr)
        return 2
    except TreeCoverError as exc:
        print(f"treecover: {exc}", file=sys.stderr)
        return 1
    return int(code or 0)


if __name__ == "__main__":
    sys.exit(main())
