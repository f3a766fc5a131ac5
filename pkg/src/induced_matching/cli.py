"""Command-line interface: ``induced-matching {solve,generate,conjecture-scan,bench}``.

Exit codes: 0 success, 1 I/O, parse or usage error, 2 research finding
(a theorem certificate failed, or the scan found a violator).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .baseline import FIRST_EDGE, MIN_CONFLICT, greedy_induced_matching
from .bench import ALGORITHMS, bench, rows_to_csv
from .bounds import bound_report
from .constructive import PROVEN_DELTA0, RunConfig, run
from .exact import default_budget, nu_s_exact
from .generators import FAMILIES, make_family
from .graph import GraphError
from .io import EdgeListError, build_report, dump_report, read_graph, write_edge_list
from .scan import EXHAUSTIVE_MAX_N, scan_exhaustive, scan_random

EXIT_OK, EXIT_ERROR, EXIT_FINDING = 0, 1, 2

SOLVE_ALGOS = ("exact", "constructive", "greedy-first", "greedy-minconf")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    try:
        g = read_graph(args.path)
    except (OSError, EdgeListError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    budget = args.budget if args.budget is not None else default_budget()
    trace = exact = None
    t0 = time.perf_counter()
    if args.algo == "constructive":
        m, trace = run(g, RunConfig(args.delta0))
    elif args.algo == "exact":
        exact = nu_s_exact(g, budget)
        m = exact.witness
    else:
        m = greedy_induced_matching(g, FIRST_EDGE if args.algo == "greedy-first" else MIN_CONFLICT)
    elapsed = time.perf_counter() - t0
    report = build_report(g, args.algo, {args.algo: m}, bound_report(g, {args.algo: m}),
                          timing_s=elapsed, seed=args.seed, trace=trace, exact=exact)
    try:
        _emit(dump_report(report), args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if trace is not None and not trace.certificate_ok:
        print("certificate failed: an uncertified step occurred with delta >= delta0", file=sys.stderr)
        return EXIT_FINDING
    return EXIT_OK


def cmd_generate(args) -> int:
    params = {k: v for k, v in (("delta", args.delta), ("orders", args.orders), ("k", args.k),
                                ("n", args.n), ("p", args.p), ("d", args.d)) if v is not None}
    try:
        base = read_graph(args.base) if args.base else None
        g = make_family(args.family, params, args.seed, base)
    except (OSError, EdgeListError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    comment = f"{args.family} {' '.join(f'{k}={v}' for k, v in params.items())} seed={args.seed}"
    _emit(write_edge_list(g, comment.strip()), args.out)
    return EXIT_OK


def cmd_conjecture_scan(args) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    if args.random_trials:
        lo, _, hi = args.random_n.partition("..")
        result = scan_random(args.random_trials, int(lo), int(hi or lo), args.seed, budget)
    else:
        if args.max_n > EXHAUSTIVE_MAX_N:
            print(f"error: exhaustive scan refuses --max-n > {EXHAUSTIVE_MAX_N}; "
                  f"use --random-trials", file=sys.stderr)
            return EXIT_ERROR
        result = scan_exhaustive(args.max_n, budget)
    payload = {"toolkit_version": __version__, **result.to_dict()}
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    print(f"checked {result.checked}: {result.holds} hold ({len(result.tight)} tight), "
          f"{len(result.exceptions)} exceptions, {len(result.violators)} violators, "
          f"{len(result.inconclusive)} inconclusive", file=sys.stderr)
    return EXIT_FINDING if result.violators else EXIT_OK


def cmd_bench(args) -> int:
    algos = tuple(a.strip() for a in args.algos.split(","))
    unknown = set(algos) - set(ALGORITHMS)
    if unknown:
        print(f"error: unknown algorithms {sorted(unknown)}", file=sys.stderr)
        return EXIT_ERROR
    try:
        rows = bench(args.corpus, args.seed, algos, args.budget, args.delta0)
        _emit(rows_to_csv(rows), args.out)
    except (OSError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="induced-matching", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute an induced matching of an edge-list graph")
    p.add_argument("path")
    p.add_argument("--algo", choices=SOLVE_ALGOS, default="constructive")
    p.add_argument("--delta0", type=int, default=PROVEN_DELTA0)
    p.add_argument("--budget", type=int, default=None, help="exact search node budget")
    p.add_argument("--seed", type=int, default=None, help="recorded in the report")
    p.add_argument("--out", default=None, help="report path (default: stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--delta", type=int)
    p.add_argument("--orders", help="five class sizes, e.g. 2,2,2,2,2")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--d", type=int)
    p.add_argument("--base", help="base graph edge list for 'pendants'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("conjecture-scan", help="check small connected graphs with max degree >= 3")
    p.add_argument("--max-n", type=int, default=EXHAUSTIVE_MAX_N)
    p.add_argument("--random-trials", type=int, default=0)
    p.add_argument("--random-n", default="8..10", help="vertex range for random trials")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_conjecture_scan)

    p = sub.add_parser("bench", help="compare algorithms on a seeded corpus, CSV output")
    p.add_argument("corpus", help="e.g. 'h1:delta=1000,copies=10;regular:n=2000,d=50@3'")
    p.add_argument("--algos", default=",".join(ALGORITHMS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--delta0", type=int, default=PROVEN_DELTA0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
