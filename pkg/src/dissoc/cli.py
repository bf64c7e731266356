"""Command-line front end.

Subcommands: ``count`` (exact set count of one input graph), ``extremal``
(named extremal constructions), ``verify`` (the exhaustive checking suite),
``scan`` (per-order maxima tables) and ``gen`` (tree catalogs).  Output for
fixed arguments is byte-identical across runs and worker counts.

Exit codes: 0 all checks verified/consistent, 1 a violation or
counterexample was found, 2 usage or resource errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .enumeration import BudgetError, count_mds_brute, enumerate_mds
from .generators import (
    build_conjecture_tree,
    build_f1_extremal,
    build_f2_extremal,
    build_t_star,
    build_t_star_8,
    build_t_star_9,
    gen_free_trees,
)
from .graph import (
    GraphError,
    edge_list,
    format_edge_list,
    is_forest,
    load_graph,
    members,
    to_graph6,
)
from .treedp import count_mds_forest
from . import verify as V


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dissoc",
        description="Count maximal dissociation sets and verify the extremal bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count the maximal dissociation sets of one graph")
    p_count.add_argument("input", nargs="?", help="input file (default: stdin)")
    p_count.add_argument(
        "--format", choices=("auto", "edges", "graph6"), default="auto",
        help="input format (default: auto-detect)",
    )
    p_count.add_argument(
        "--enumerate", action="store_true",
        help="list the sets, one sorted vertex list per line",
    )
    p_count.set_defaults(func=cmd_count)

    p_ext = sub.add_parser("extremal", help="print a named extremal construction and its count")
    p_ext.add_argument(
        "family", choices=("t-star", "t-star8", "t-star9", "f1", "f2", "conjecture")
    )
    p_ext.add_argument("n", nargs="?", type=int, help="order (unused for t-star8/t-star9)")
    p_ext.set_defaults(func=cmd_extremal)

    p_ver = sub.add_parser("verify", help="run exhaustive verification")
    p_ver.add_argument(
        "target",
        choices=("theorem1", "theorem2", "f2", "lemma4", "lemmas", "claim1",
                 "conjecture", "all"),
    )
    p_ver.add_argument("--n-max", type=_positive, default=12)
    p_ver.add_argument("--workers", type=_positive, default=os.cpu_count() or 1)
    p_ver.add_argument("--format", choices=("table", "csv", "jsonl"), default="table")
    p_ver.add_argument("--output", help="write output to this path instead of stdout")
    p_ver.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="per-order maxima over trees or forests")
    p_scan.add_argument("population", choices=("trees", "forests"))
    p_scan.add_argument("--n-max", type=_positive, default=12)
    p_scan.add_argument("--min-component", type=_positive, default=1)
    p_scan.add_argument("--workers", type=_positive, default=os.cpu_count() or 1)
    p_scan.add_argument("--format", choices=("table", "csv", "jsonl"), default="table")
    p_scan.add_argument("--output", help="write output to this path instead of stdout")
    p_scan.set_defaults(func=cmd_scan)

    p_gen = sub.add_parser("gen", help="list all trees of one order")
    p_gen.add_argument("n", type=_positive)
    p_gen.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p_gen.add_argument("--output", help="write output to this path instead of stdout")
    p_gen.set_defaults(func=cmd_gen)

    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_count(args) -> int:
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    fmt = None if args.format == "auto" else args.format
    g = load_graph(text, fmt)
    if args.enumerate:
        for s in enumerate_mds(g):
            print(" ".join(str(v) for v in members(s)))
        return 0
    phi = count_mds_forest(g) if is_forest(g) else count_mds_brute(g)
    print(phi)
    return 0


def cmd_extremal(args) -> int:
    family, n = args.family, args.n
    if family in ("t-star8", "t-star9"):
        graphs = [build_t_star_8() if family == "t-star8" else build_t_star_9()]
    else:
        if n is None:
            raise GraphError(f"family {family!r} requires an order argument")
        if family == "t-star":
            if n % 3 != 1:
                raise GraphError(
                    "t-star requires n = 1 (mod 3); for n = 8 or 9 use t-star8 / t-star9"
                )
            graphs = [build_t_star(n)]
        elif family == "f1":
            graphs = [build_f1_extremal(n)]
        elif family == "f2":
            graphs = build_f2_extremal(n)
        else:
            graphs = build_conjecture_tree(n)
    blocks = []
    for g in graphs:
        blocks.append(f"{format_edge_list(g)}\nphi={count_mds_forest(g)}")
    print("\n\n".join(blocks))
    return 0


def _clamp(n_max: int, cap: int) -> int:
    return min(n_max, cap)


def cmd_verify(args) -> int:
    n = args.n_max
    w = args.workers
    try:
        if args.target == "all":
            items, code = V.verify_all(n, w)
        elif args.target == "theorem1":
            items = V.verify_theorem1(n, w)
        elif args.target == "theorem2":
            items = V.verify_theorem2_trees(n, w)
        elif args.target == "f2":
            items = V.verify_f2(n, w)
        elif args.target == "lemma4":
            items = V.verify_lemma4(w)
        elif args.target == "lemmas":
            items = V.verify_lemma_monotonicity(n)
        elif args.target == "claim1":
            items = [V.verify_claim1_identity(), V.verify_claim1_positivity()]
        else:
            items = V.check_conjecture(n, w)
    except ValueError as exc:
        raise BudgetError(str(exc)) from None
    if args.target != "all":
        code = 1 if any(
            item.verdict in (V.VIOLATION, V.COUNTEREXAMPLE) for item in items
        ) else 0

    if args.format == "csv":
        _emit(V.items_to_csv(items), args.output)
    elif args.format == "jsonl":
        _emit(V.items_to_jsonl(items), args.output)
    else:
        _emit(_items_table(items), args.output)
    return code


def _items_table(items) -> str:
    lines = []
    for item in items:
        if isinstance(item, V.VerificationReport):
            second = "-" if item.second_max_phi is None else str(item.second_max_phi)
            lines.append(
                f"{item.check:<22} n={item.n:<3} {item.population:<15} "
                f"classes={item.classes:<6} max={item.max_phi:<5} second={second:<5} "
                f"{item.verdict}"
            )
            for name, v in item.bound_checks:
                lines.append(f"    [{v:>4}] {name}")
        else:
            strict = "-" if item.strict_instances is None else str(item.strict_instances)
            lines.append(
                f"{item.check:<22} {item.detail}; instances={item.instances} "
                f"strict={strict} violations={item.violations} {item.verdict}"
            )
            for msg in item.messages:
                lines.append(f"    {msg}")
    verdicts = {item.verdict for item in items}
    if verdicts & {V.VIOLATION, V.COUNTEREXAMPLE}:
        lines.append("RESULT: violations found")
    else:
        lines.append("RESULT: all checks verified/consistent")
    return "\n".join(lines) + "\n"


def cmd_scan(args) -> int:
    try:
        rows = V.scan_max_phi(args.n_max, args.population, args.workers, args.min_component)
    except ValueError as exc:
        raise BudgetError(str(exc)) from None
    if args.format == "csv":
        _emit(V.scan_rows_to_csv(rows), args.output)
    elif args.format == "jsonl":
        _emit(V.scan_rows_to_jsonl(rows), args.output)
    else:
        header = V.SCAN_CSV_HEADER.split(",")[:8]
        widths = [3, 7, 8, 14, 14, 8, 8, 12]
        out = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
        for row in rows:
            vals = [str("" if row[k] is None else row[k]) for k in header]
            out.append("  ".join(v.ljust(w) for v, w in zip(vals, widths)))
        _emit("\n".join(out) + "\n", args.output)
    return 0


def cmd_gen(args) -> int:
    lines = []
    for g in gen_free_trees(args.n):
        if args.format == "graph6":
            lines.append(to_graph6(g))
        else:
            edges = edge_list(g)
            flat = " ".join(f"{u} {v}" for u, v in edges)
            lines.append(f"{g.n} {len(edges)} {flat}".rstrip())
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BudgetError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
