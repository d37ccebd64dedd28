"""Command-line front end: enum, max, gen, and oracle subcommands."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .driver import run_enumeration
from .generators import example_graph, gnp, moon_moser
from .graph import FormatError, read_graph, write_graph
from .maxsearch import find_maximum
from .oracle import OracleSizeError, brute_maximal, brute_maximum

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("WODC_THREADS", "1")))
    except ValueError:
        return 1


def _write_solutions(path: str, rows: list[tuple[int, ...]]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(" ".join(str(x) for x in row) + "\n")


def _write_stats(path: str, stats: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(stats, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _stats_dict(mode, k, q, g, n_red, m_red, count, max_size, stats, args) -> dict:
    return {
        "mode": mode,
        "k": k,
        "q": q,
        "n": g.n,
        "m": g.m,
        "n_reduced": n_red,
        "m_reduced": m_red,
        "num_solutions": count,
        "max_size": max_size,
        "tree_nodes": stats.tree_nodes,
        "ub_prunes": stats.ub_prunes,
        "time_build_ms": stats.time_build_ms,
        "time_reduce_ms": stats.time_reduce_ms,
        "time_search_ms": stats.time_search_ms,
        "pivot_enabled": not getattr(args, "no_pivot", False),
        "reduce_enabled": not getattr(args, "no_reduce", False),
        "decompose_enabled": not getattr(args, "no_decompose", False),
        "threads": getattr(args, "threads", 1),
    }


def cmd_enum(args) -> int:
    if args.k < 0:
        print("error: k must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    if args.q < args.k + 2:
        print(f"error: q must be at least k + 2 (k={args.k} needs q >= {args.k + 2})",
              file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    g = read_graph(args.input, args.format)
    build_ms = int((time.perf_counter() - t0) * 1000)

    mode = "count-only" if args.count_only and not args.solutions_out else "collect"
    result = run_enumeration(
        g, args.k, args.q,
        pivot=not args.no_pivot,
        use_reduction=not args.no_reduce,
        use_decomposition=not args.no_decompose,
        threads=args.threads,
        mode=mode,
    )
    result.stats.time_build_ms = build_ms
    n_red = result.report.n_after if result.report else g.n
    m_red = result.report.m_after if result.report else g.m

    print(f"solutions: {result.count}")
    print(f"max_size: {result.max_size}")
    print(f"tree_nodes: {result.stats.tree_nodes}")
    print(f"time_build_ms: {result.stats.time_build_ms}")
    print(f"time_reduce_ms: {result.stats.time_reduce_ms}")
    print(f"time_search_ms: {result.stats.time_search_ms}")

    if args.solutions_out:
        _write_solutions(args.solutions_out, result.solutions or [])
    if args.stats_json:
        _write_stats(args.stats_json, _stats_dict(
            "enum", args.k, args.q, g, n_red, m_red,
            result.count, result.max_size, result.stats, args))
    return EXIT_OK


def cmd_max(args) -> int:
    if args.k < 0:
        print("error: k must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    g = read_graph(args.input, args.format)
    build_ms = int((time.perf_counter() - t0) * 1000)

    solution, stats, report = find_maximum(g, args.k, pivot=not args.no_pivot,
                                           threads=args.threads)
    stats.time_build_ms += build_ms

    print(f"max_size: {solution.size}")
    print("solution: " + " ".join(str(x) for x in solution.members))
    print(f"missing_edges: {solution.missing}")
    print(f"tree_nodes: {stats.tree_nodes}")
    print(f"reduced: n {report.n_before}->{report.n_after} m {report.m_before}->{report.m_after} "
          f"rounds {report.rounds}")
    print(f"time_build_ms: {stats.time_build_ms}")
    print(f"time_reduce_ms: {stats.time_reduce_ms}")
    print(f"time_search_ms: {stats.time_search_ms}")

    if args.stats_json:
        _write_stats(args.stats_json, _stats_dict(
            "max", args.k, solution.size + 1, g, report.n_after, report.m_after,
            1 if solution.size else 0, solution.size, stats, args))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "moon-moser":
        g = moon_moser(args.t)
    elif args.family == "gnp":
        g = gnp(args.n, args.p, args.seed)
    else:
        g = example_graph(args.which)
    if args.output:
        write_graph(g, args.output)
    else:
        from .graph import dump_edge_list

        dump_edge_list(g, sys.stdout)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = read_graph(args.input, args.format)
    if args.problem == "enum":
        if args.q < 1:
            print("error: q must be at least 1", file=sys.stderr)
            return EXIT_USAGE
        rows = brute_maximal(g, args.k, args.q)
        labeled = sorted(tuple(sorted(g.labels[v] for v in row)) for row in rows)
        print(f"solutions: {len(labeled)}")
        if args.solutions_out:
            _write_solutions(args.solutions_out, labeled)
        else:
            for row in labeled:
                print(" ".join(str(x) for x in row))
    else:
        print(f"max_size: {brute_maximum(g, args.k)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wodc",
                                     description="Exact k-defective clique solver")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("input", help="edge-list file")
        p.add_argument("--format", choices=("edges", "nm-header"), default="edges")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--no-pivot", action="store_true")
        p.add_argument("--threads", type=int, default=_default_threads())
        p.add_argument("--stats-json", metavar="FILE")

    p_enum = sub.add_parser("enum", help="enumerate maximal k-defective cliques")
    add_common(p_enum)
    p_enum.add_argument("--q", type=int, required=True)
    p_enum.add_argument("--no-reduce", action="store_true")
    p_enum.add_argument("--no-decompose", action="store_true")
    p_enum.add_argument("--count-only", action="store_true")
    p_enum.add_argument("--solutions-out", metavar="FILE")
    p_enum.set_defaults(func=cmd_enum)

    p_max = sub.add_parser("max", help="find one maximum k-defective clique")
    add_common(p_max)
    p_max.set_defaults(func=cmd_max, no_reduce=False, no_decompose=False)

    p_gen = sub.add_parser("gen", help="write generated graphs as edge lists")
    gen_sub = p_gen.add_subparsers(dest="family", required=True)
    p_mm = gen_sub.add_parser("moon-moser")
    p_mm.add_argument("--t", type=int, required=True)
    p_mm.add_argument("-o", "--output")
    p_mm.set_defaults(func=cmd_gen)
    p_gnp = gen_sub.add_parser("gnp")
    p_gnp.add_argument("--n", type=int, required=True)
    p_gnp.add_argument("--p", type=float, required=True)
    p_gnp.add_argument("--seed", type=int, default=0)
    p_gnp.add_argument("-o", "--output")
    p_gnp.set_defaults(func=cmd_gen)
    p_demo = gen_sub.add_parser("demo")
    p_demo.add_argument("--which", choices=("demo8", "demo9"), required=True)
    p_demo.add_argument("-o", "--output")
    p_demo.set_defaults(func=cmd_gen)

    p_oracle = sub.add_parser("oracle", help="brute-force reference results")
    oracle_sub = p_oracle.add_subparsers(dest="problem", required=True)
    p_oe = oracle_sub.add_parser("enum")
    p_oe.add_argument("input")
    p_oe.add_argument("--format", choices=("edges", "nm-header"), default="edges")
    p_oe.add_argument("--k", type=int, required=True)
    p_oe.add_argument("--q", type=int, required=True)
    p_oe.add_argument("--solutions-out", metavar="FILE")
    p_oe.set_defaults(func=cmd_oracle)
    p_om = oracle_sub.add_parser("max")
    p_om.add_argument("input")
    p_om.add_argument("--format", choices=("edges", "nm-header"), default="edges")
    p_om.add_argument("--k", type=int, required=True)
    p_om.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
