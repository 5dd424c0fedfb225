"""Command-line interface.

Exit codes: 0 success, 1 a mathematical verification failed, 2 bad usage or
unreadable input.
"""

from __future__ import annotations

import argparse
import datetime
import os
import sys
import warnings
from pathlib import Path
from typing import Sequence

from . import census as census_mod
from .coloring import one_factorize_complete_even, vizing_color
from .connectivity import lambda_global, lambda_plus, mader_lambda_plus_bound
from .constructions import extremal_even, min_size_rd, peel_factorable
from .errors import RdError
from .io import (
    coloring_from_json,
    coloring_to_json,
    dumps,
    factorization_to_json,
    graph_from_json,
    graph_to_json,
    read_json,
    to_dot,
    write_json,
)
from .rainbow import DEFAULT_EDGE_BUDGET, is_rd_coloring, rd_exact, star_rd_check

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _default_cache_dir() -> Path:
    root = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(root) / "rdisconnect"


def _stamp(payload: dict, args: argparse.Namespace) -> dict:
    if args.timestamps:
        payload = dict(payload, generated_at=datetime.datetime.now(datetime.timezone.utc).isoformat())
    return payload


def _load_graph(path: str):
    return graph_from_json(read_json(path), where=path)


def cmd_construct(args: argparse.Namespace) -> int:
    prefix = args.out
    coloring = None
    if args.even_extremal:
        n, k = args.even_extremal
        w = extremal_even(n, k)
        graph, coloring = w.graph, w.coloring
        write_json(f"{prefix}.graph.json", graph_to_json(graph))
        write_json(f"{prefix}.coloring.json", coloring_to_json(coloring))
        summary = {"graph": f"{prefix}.graph.json", "coloring": f"{prefix}.coloring.json",
                   "hub": w.hub, "edges": graph.m, "size_formula_value": w.size_formula_value}
    elif args.peel:
        n, k = args.peel
        p = peel_factorable(n, k)
        graph = p.graph
        coloring = p.factorization.to_coloring()
        write_json(f"{prefix}.graph.json", graph_to_json(graph))
        write_json(f"{prefix}.peel.json", {
            "hub": p.hub,
            "factors": factorization_to_json(p.factorization)["factors"],
            "addable_matching": [list(e) for e in p.addable_matching],
            "pair_labels": [[i, side, v] for (i, side), v in sorted(p.pair_labels.items())],
            "removed_rounds": list(p.removed),
        })
        summary = {"graph": f"{prefix}.graph.json", "peel": f"{prefix}.peel.json", "hub": p.hub, "edges": graph.m}
    else:
        n, k = args.min_size
        graph = min_size_rd(n, k)
        write_json(f"{prefix}.graph.json", graph_to_json(graph))
        summary = {"graph": f"{prefix}.graph.json", "edges": graph.m}
    if args.dot:
        Path(args.dot).write_text(to_dot(graph, coloring))
        summary["dot"] = args.dot
    sys.stdout.write(dumps(summary))
    return EXIT_OK


def cmd_rd(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = rd_exact(g, edge_budget=args.budget)
    sys.stdout.write(dumps(_stamp(report.to_json(), args)))
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    payload = {
        "lambda": lambda_global(g),
        "lambda_plus": lambda_plus(g),
        "mader_bound": mader_lambda_plus_bound(g),
        "chi_prime_upper": vizing_color(g).k,
        "max_degree": g.max_degree,
    }
    sys.stdout.write(dumps(_stamp(payload, args)))
    return EXIT_OK


def cmd_factorize(args: argparse.Namespace) -> int:
    f = one_factorize_complete_even(args.n)
    sys.stdout.write(dumps(factorization_to_json(f)))
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    cache = None if args.no_cache else (args.cache_dir or _default_cache_dir())
    tables = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for n in range(2, args.max_n + 1):
            print(f"census n={n} ...", file=sys.stderr)
            tables.append(census_mod.run_census(n, workers=args.workers, cache_dir=cache))
    if args.format == "csv":
        text = census_mod.tables_to_csv(tables)
    else:
        text = dumps(_stamp({"tables": [census_mod.table_to_json(t) for t in tables]}, args))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    failed = any(
        r.status == census_mod.FAIL for t in tables for r in t.rows
    ) or any(c.status == census_mod.FAIL for t in tables for c in census_mod.verify_relations(t))
    for t in tables:
        bad = [r.k for r in t.rows if r.status != census_mod.PASS]
        print(f"n={t.n}: {len(t.records)} graphs, " + ("all rows PASS" if not bad else f"rows not passing: k={bad}"),
              file=sys.stderr)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    c = coloring_from_json(read_json(args.coloring), where=args.coloring)
    if len(c.colors) != g.m:
        print(f"error: {args.coloring}: 'colors' has {len(c.colors)} entries, graph has {g.m} edges",
              file=sys.stderr)
        return EXIT_USAGE
    if args.star_hub is not None:
        if not 0 <= args.star_hub < g.n:
            print(f"error: --star-hub {args.star_hub} is not a vertex", file=sys.stderr)
            return EXIT_USAGE
        ok = star_rd_check(g, c, args.star_hub)
        payload = {"check": "star", "hub": args.star_hub, "ok": ok}
    else:
        ok = is_rd_coloring(g, c)
        payload = {"check": "full", "ok": ok}
    sys.stdout.write(dumps(payload))
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rdisconnect", description="Rainbow disconnection number toolkit.")
    parser.add_argument("--timestamps", action="store_true", help="add generated_at to JSON reports")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an explicit graph")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--even-extremal", nargs=2, type=int, metavar=("N", "K"))
    which.add_argument("--peel", nargs=2, type=int, metavar=("N", "K"))
    which.add_argument("--min-size", nargs=2, type=int, metavar=("N", "K"))
    p.add_argument("--out", required=True, metavar="PREFIX")
    p.add_argument("--dot", metavar="PATH", help="also write Graphviz source")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("rd", help="exact rd with bounds")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=DEFAULT_EDGE_BUDGET, metavar="M")
    p.set_defaults(func=cmd_rd)

    p = sub.add_parser("bounds", help="connectivity and coloring bounds only")
    p.add_argument("graph")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("factorize", help="circle-method 1-factorization of K_N")
    p.add_argument("n", type=int, metavar="N")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("census", help="exhaustive check of t, s, g and f")
    p.add_argument("--max-n", type=int, required=True, metavar="N")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--cache-dir", type=Path, default=None)
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="check a rainbow disconnection coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--star-hub", type=int, metavar="U")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
