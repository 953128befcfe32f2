"""Command-line front end.

Exit codes: 0 success / no failing law, 1 at least one failing law,
2 bad input or usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .graph import FormatError, Graph, parse_edge_list, parse_graph6, read_graph6_lines
from .hochster import BettiTable, betti_table, max_shifts, witnesses
from .laws import ALL_LAWS, FAIL, TABLE_LAWS, check_all, check_table
from .scan import RunConfig, default_threads, run_scan, result_lines, write_outputs

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def load_graphs(path: str | None, g6: str | None = None, fmt: str = "auto") -> list[Graph]:
    """Graphs from a graph6 or edge-list file (``-`` is stdin) or an inline graph6 string."""
    if g6 is not None:
        return [parse_graph6(g6)]
    if path is None:
        raise InputError("no graph input given")
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "auto":
        # graph6 bytes lie in '?'..'~', so digits only ever appear in edge lists
        body = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith(("#", ">"))]
        fmt = "edges" if body and body[0].strip()[:1].isdigit() else "graph6"
    if fmt == "edges":
        return [parse_edge_list(text)]
    graphs = list(read_graph6_lines(text.splitlines()))
    if not graphs:
        raise InputError(f"no graphs in {path}")
    return graphs


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", default=None, help="graph6 or edge-list file ('-' for stdin)")
    p.add_argument("--g6", help="inline graph6 string instead of a file")
    p.add_argument("--input-format", choices=("auto", "graph6", "edges"), default="auto")


def _add_check_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", type=int, action="append", dest="fields", help="prime characteristic (repeatable, default 2)")
    p.add_argument("--laws", default=",".join(ALL_LAWS), help="comma-separated law names")
    p.add_argument("--rmax", type=int, default=None, help="largest matching size for the matching lemma")
    p.add_argument("--mv-samples", type=int, default=32, help="random Mayer-Vietoris decompositions per graph")
    p.add_argument("--budget-ms", type=float, default=None, help="per-graph time budget")


def _laws(text: str) -> tuple[str, ...]:
    laws = tuple(x.strip() for x in text.split(",") if x.strip())
    unknown = set(laws) - set(ALL_LAWS)
    if unknown:
        raise InputError(f"unknown laws: {', '.join(sorted(unknown))}; choose from {', '.join(ALL_LAWS)}")
    return laws


def cmd_betti(args) -> int:
    for k, g in enumerate(load_graphs(args.graph, args.g6, args.input_format)):
        table = betti_table(g, args.field)
        if k:
            print()
        if args.output == "json":
            print(table.to_json())
        elif args.output == "diagram":
            print(table.diagram())
        else:
            print(table.to_text(), end="")
    return EXIT_OK


def cmd_shifts(args) -> int:
    for g in load_graphs(args.graph, args.g6, args.input_format):
        t = max_shifts(betti_table(g, args.field))
        print(f"{t}" + (f"\tpd={t.pd}" if args.pd else ""))
    return EXIT_OK


def cmd_witness(args) -> int:
    for g in load_graphs(args.graph, args.g6, args.input_format):
        table = betti_table(g, args.field)
        if not 1 <= args.index <= table.pd:
            raise InputError(f"index {args.index} outside 1..pd={table.pd}")
        for wit in witnesses(g, args.index, args.field, table):
            verts = ",".join(map(str, wit.vertices))
            print(f"i={wit.i} j={wit.j} W={{{verts}}} d={wit.d} dim={wit.multiplicity}")
    return EXIT_OK


def cmd_check(args) -> int:
    fields = args.fields or [2]
    laws = _laws(args.laws)
    if args.table:
        try:
            with open(args.table) as fh:
                table = BettiTable.from_json(fh.read())
        except (OSError, ValueError, KeyError) as exc:
            raise InputError(f"cannot load table {args.table}: {exc}") from None
        reports = check_table(table, [x for x in laws if x in TABLE_LAWS])
    else:
        reports = []
        budget = None if args.budget_ms is None else args.budget_ms / 1000
        for g in load_graphs(args.graph, args.g6, args.input_format):
            reports += check_all(g, fields, laws, args.rmax, args.mv_samples, budget_s=budget)
    for r in reports:
        print(r.to_json(timings=not args.no_timings))
    return EXIT_FAIL if any(r.status == FAIL for r in reports) else EXIT_OK


def cmd_scan(args) -> int:
    if args.corpus is None and args.enumerate is None:
        raise InputError("scan needs --corpus FILE or --enumerate N")
    try:
        config = RunConfig(
            corpus=args.corpus,
            enumerate_n=args.enumerate,
            fields=tuple(args.fields or [2]),
            laws=_laws(args.laws),
            r_max=args.rmax,
            mv_samples=args.mv_samples,
            threads=args.threads,
            budget_ms=args.budget_ms,
            out=args.out,
            timings=not args.no_timings,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.corpus is not None:
        try:
            open(args.corpus).close()
        except OSError as exc:
            raise InputError(f"cannot read {args.corpus}: {exc.strerror}") from None
    summary, results = run_scan(config)
    if config.out:
        write_outputs(config.out, summary, results, config.timings)
    else:
        for line in result_lines(results, only_failures=True):
            print(line)
    print(summary.to_json(config.timings))
    return EXIT_FAIL if summary.failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgebetti", description="Betti tables of edge ideals and shift-law checks")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="print the graded Betti table")
    _add_input(p)
    p.add_argument("--field", type=int, default=2)
    p.add_argument("--output", choices=("text", "json", "diagram"), default="text")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("shifts", help="print the maximal shifts t_0 .. t_pd")
    _add_input(p)
    p.add_argument("--field", type=int, default=2)
    p.add_argument("--pd", action="store_true", help="append the projective dimension")
    p.set_defaults(func=cmd_shifts)

    p = sub.add_parser("witness", help="list subsets W realising t_i")
    _add_input(p)
    p.add_argument("--index", "-i", type=int, required=True)
    p.add_argument("--field", type=int, default=2)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("check", help="run laws on one graph (or a serialized table)")
    _add_input(p)
    _add_check_options(p)
    p.add_argument("--table", help="JSON Betti table to check instead of a graph (table-only laws)")
    p.add_argument("--no-timings", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="run laws over a corpus")
    p.add_argument("--corpus", help="graph6 file, one graph per line")
    p.add_argument("--enumerate", type=int, help="all graphs with 1..N vertices (N <= 6)")
    _add_check_options(p)
    p.add_argument("--threads", type=int, default=default_threads(), help="worker processes (default $EDGEBETTI_THREADS or 1)")
    p.add_argument("--out", help="directory for summary.json, results.jsonl, violations.jsonl")
    p.add_argument("--no-timings", action="store_true", help="omit timing fields (byte-reproducible output)")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (InputError, FormatError, ValueError) as exc:
        print(f"edgebetti: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
