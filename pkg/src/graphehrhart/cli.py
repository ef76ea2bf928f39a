"""graphehrhart command line.

Subcommands::

    count    lattice-point counts L(t) (or interior counts) for t = 0..t_max
    hstar    certified h*-vector with palindromicity and degree report
    tables   the A050446 and A205497 arrays built from path-graph polytopes
    check    theorem suites on one instance or on seeded random bipartite graphs
    euler    Euler zigzag numbers next to h_n(1) for path graphs

Exit status: 0 when everything passes, 1 when a check fails or an h*-vector
is refused, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence

from .checks import CHECKS, CONJECTURE, CheckReport, describe, random_instances, run_suite
from .ehrhart import EhrhartSummary, QuasiPolynomialError, certify_counts
from .formats import ParseError, load_instance
from .graph_model import Graph, Hypergraph, bipartition, cycle_graph, linear_graph
from .lattice import count_points, count_weighted_graphs
from .paths import a050446_array, a205497_array, anti_diagonal, euler_numbers, path_hstar, render_table
from .polytope import IsolatedVertexError, from_graph, from_hypergraph, regularity

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output helpers


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# instance selection


def _subject(args):
    chosen = [x for x in (args.input, args.path, args.cycle) if x is not None]
    if len(chosen) > 1:
        raise UsageError("give at most one of INPUT, --path, --cycle")
    if args.path is not None:
        return linear_graph(args.path)
    if args.cycle is not None:
        return cycle_graph(args.cycle)
    if args.input is not None:
        return load_instance(args.input, args.kind)
    return None


def _require_subject(args):
    s = _subject(args)
    if s is None:
        raise UsageError("no instance: give INPUT, --path N or --cycle N")
    return s


def _counter(subject, isolated: str, workers: Optional[int] = None):
    """Return (count(t, strict), dimension, k) honoring the isolated-vertex policy."""
    if isinstance(subject, Graph) and subject.isolated_vertices() and isolated == "product":
        g = subject
        if not g.edges:
            def count(t, strict):
                return max(t - 1, 0) ** g.vertex_count if strict else (t + 1) ** g.vertex_count
            return count, g.vertex_count, None
        core, n_iso = g.without_isolated()
        p = from_graph(core)

        def count(t, strict):
            if strict:
                return count_points(p, t, strict=True) * max(t - 1, 0) ** n_iso
            return count_weighted_graphs(g, t)
        return count, g.vertex_count, None
    if isinstance(subject, Graph):
        p = from_graph(subject)
    elif isinstance(subject, Hypergraph):
        p = from_hypergraph(subject)
    else:
        p = subject
    cert = regularity(p)
    return (lambda t, strict: count_points(p, t, strict, workers=workers)), p.dimension, (cert.k if cert else None)


# ---------------------------------------------------------------------------
# commands


def cmd_count(args) -> int:
    subject = _require_subject(args)
    count, d, _ = _counter(subject, args.isolated, args.threads)
    rows = []
    for t in range(args.t_max + 1):
        row = [t, count(t, False)]
        if args.strict:
            row.append(count(t, True))
        rows.append(row)
    header = ["t", "closed"] + (["interior"] if args.strict else [])
    if args.format == "json":
        out = {"instance": describe(subject), "d": d, "t": [r[0] for r in rows], "closed": [r[1] for r in rows]}
        if args.strict:
            out["interior"] = [r[2] for r in rows]
        _emit(args, _json(out))
    elif args.format == "csv":
        _emit(args, _csv([header] + rows))
    else:
        width = max(len(str(x)) for r in rows for x in r)
        lines = [describe(subject), "  ".join(h.rjust(width) for h in header)]
        lines += ["  ".join(str(x).rjust(width) for x in r) for r in rows]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _hstar_summary(subject, isolated: str) -> EhrhartSummary:
    count, d, k = _counter(subject, isolated)
    return certify_counts([count(t, False) for t in range(d + 3)], d, k)


def cmd_hstar(args) -> int:
    subject = _require_subject(args)
    notes = []
    if isinstance(subject, Graph) and bipartition(subject) is None:
        notes.append("graph is not bipartite (odd cycle present): bipartite hypothesis unmet")
    if isinstance(subject, Hypergraph):
        notes.append(f"{CONJECTURE}: palindromicity is not a proven claim here")
    try:
        summary = _hstar_summary(subject, args.isolated)
    except QuasiPolynomialError as exc:
        msg = f"{exc}; no h*-vector certified"
        if notes:
            msg += "; " + notes[0]
        if args.format == "json":
            _emit(args, _json({"instance": describe(subject), "certified": False, "error": msg,
                               "witness": {"t": exc.witness[0], "predicted": exc.witness[1], "actual": exc.witness[2]}}))
        else:
            _emit(args, f"{describe(subject)}\nREFUSED: {msg}\n")
        return EXIT_FAIL
    h = summary.hstar
    rep = summary.palindrome
    vol = f"{h.at_one()}/{factorial(h.d)}"
    if args.format == "json":
        out = summary.to_json()
        out.update(instance=describe(subject), certified=True, notes=notes)
        _emit(args, _json(out))
    elif args.format == "csv":
        _emit(args, _csv([["j", "h_j"]] + [[j, x] for j, x in enumerate(h.trimmed())]))
    else:
        lines = [
            describe(subject),
            f"h*           : {', '.join(map(str, h.trimmed()))}",
            f"d            : {h.d}",
            f"k            : {summary.k if summary.k is not None else '-'}",
            f"palindromic  : {'yes' if rep.is_palindromic else 'no'}",
            f"degree       : {rep.effective_degree} (expected {rep.expected_degree if rep.expected_degree is not None else '-'})",
            f"h*(1)        : {h.at_one()}",
            f"volume       : {vol} = {Fraction(h.at_one(), factorial(h.d))}",
        ]
        lines += [f"note         : {n}" for n in notes]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_tables(args) -> int:
    size = args.size
    if size < 1:
        raise UsageError("--size must be positive")
    if args.which == "a050446":
        array = a050446_array(size, size)
    else:
        array = a205497_array(max(2, 2 * size))
    if args.format == "json":
        out = {"table": args.which, "rows": array}
        if args.which == "a205497":
            out["anti_diagonals"] = {str(s + 2): anti_diagonal(array, s) for s in range(size)}
        _emit(args, _json(out))
    elif args.format == "csv":
        _emit(args, _csv(array))
    else:
        text = render_table(array) + "\n"
        if args.which == "a205497":
            text += "\n" + "\n".join(
                f"h_{s + 2}: {', '.join(map(str, anti_diagonal(array, s)))}" for s in range(size)
            ) + "\n"
        _emit(args, text)
    return EXIT_OK


def _render_reports(reports: List[CheckReport], fmt: str, timing: bool, verbose: bool = False) -> str:
    if fmt == "json":
        return _json([r.to_json(timing) for r in reports])
    if fmt == "csv":
        cols = ["check", "instance", "status", "passed", "witness", "detail"] + (["elapsed_ms"] if timing else [])
        return _csv([cols] + [[r.to_json(True)[c] for c in cols] for r in reports])
    lines = []
    for r in reports:
        verdict = "PASS" if r.passed else ("CANDIDATE" if r.status == CONJECTURE else "FAIL")
        line = f"{verdict:9s} {r.check:16s} [{r.status}] {r.instance}"
        if timing:
            line += f"  ({r.elapsed_ms:.1f} ms)"
        lines.append(line)
        if r.witness:
            lines.append(f"          witness: {r.witness}")
        if r.detail and (verbose or not r.passed):
            lines.append(f"          detail: {r.detail}")
    n_pass = sum(r.passed for r in reports)
    lines.append(f"{n_pass}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    names = list(CHECKS) if args.which == "all" else [args.which]
    subject = _subject(args)
    if subject is not None:
        subjects, labels = [subject], [""]
    else:
        subjects = random_instances(args.seed, args.trials, args.min_d, args.max_d)
        labels = [f"#{i}" for i in range(len(subjects))]
    reports = run_suite(names, subjects, labels, workers=args.threads)
    _emit(args, _render_reports(reports, args.format, not args.no_timing, verbose=len(subjects) == 1))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_euler(args) -> int:
    e = euler_numbers(args.n_max)
    rows = [(n, en, path_hstar(n).at_one() if n <= args.h_max else None) for n, en in enumerate(e)]
    ok = all(h is None or h == en for _, en, h in rows)
    if args.format == "json":
        _emit(args, _json({"n": [r[0] for r in rows], "euler": e, "h_at_1": [r[2] for r in rows], "agree": ok}))
    elif args.format == "csv":
        _emit(args, _csv([["n", "E_n", "h_n(1)"]] + [[n, en, "" if h is None else h] for n, en, h in rows]))
    else:
        width = max(len(str(x)) for r in rows for x in r if x is not None)
        width = max(width, 6)
        lines = [f"{'n':>3}  {'E_n':>{width}}  {'h_n(1)':>{width}}"]
        for n, en, h in rows:
            lines.append(f"{n:>3}  {en:>{width}}  {('-' if h is None else h):>{width}}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", "-o", help="write the report to this file instead of stdout")


def _add_instance(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="edge list, hypergraph list, or matrix (.csv/.json)")
    p.add_argument("--kind", choices=("auto", "graph", "hypergraph", "matrix"), default="auto")
    p.add_argument("--path", type=int, metavar="N", help="use the path graph on N vertices")
    p.add_argument("--cycle", type=int, metavar="N", help="use the N-cycle")
    p.add_argument("--isolated", choices=("reject", "product"), default="reject",
                   help="isolated vertices: reject, or multiply counts by (t+1) each")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphehrhart", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="lattice-point counts for t = 0..t_max")
    _add_instance(p)
    p.add_argument("--t-max", type=int, default=5)
    p.add_argument("--strict", action="store_true", help="also report interior counts")
    p.add_argument("--threads", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("hstar", help="certified h*-vector and palindrome report")
    _add_instance(p)
    _add_common(p)
    p.set_defaults(func=cmd_hstar)

    p = sub.add_parser("tables", help="A050446 / A205497 arrays")
    p.add_argument("which", choices=("a050446", "a205497"))
    p.add_argument("--size", type=int, default=6)
    _add_common(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("check", help="run theorem checks")
    p.add_argument("which", choices=CHECKS + ("interior-shift", "all"))
    _add_instance(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--min-d", type=int, default=3)
    p.add_argument("--max-d", type=int, default=8)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--no-timing", action="store_true", help="omit timings (byte-identical reruns)")
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("euler", help="Euler numbers against h_n(1)")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--h-max", type=int, default=30, help="largest n for the h_n(1) column")
    _add_common(p)
    p.set_defaults(func=cmd_euler)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not 0 <= getattr(args, "seed", 0) < 2**64:
        parser.error("--seed must be an unsigned 64-bit integer")
    try:
        return args.func(args)
    except (ParseError, IsolatedVertexError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
