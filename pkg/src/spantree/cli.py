"""Command-line front end.

    spantree count FILE [--algorithm auto|dc|matrix|enum] [--json]
    spantree chromatic FILE [--eval K ...] [--json]
    spantree currents FILE --source A --sink B [--total P/Q] [--json]
    spantree family KIND --n N [--m M] [--verify] [--json]
    spantree selfcheck [--seed S] [--cases C] [--json]

Exit status: 0 success, 1 failed verification or guard exceeded, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import matrixtree, oracle
from .chromatic import chromatic_polynomial, evaluate
from .circuits import edge_currents, verify_kirchhoff
from .corpus import corpus
from .errors import GraphError, TooLarge
from .families import FamilyKind, family_graph, verify_family
from .graphfile import parse_graph
from .multigraph import Multigraph
from .treecount import Algorithm, choose_algorithm, tau, tau_dc

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _summary(g: Multigraph) -> dict:
    return {
        "vertices": g.n,
        "edges": g.total_edges,
        "betti": g.first_betti() if g.is_connected() else None,
    }


def _load(path: str) -> Multigraph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_count(args) -> int:
    g = _load(args.file)
    algo = Algorithm(args.algorithm)
    used = choose_algorithm(g) if algo is Algorithm.AUTO else algo
    t0 = time.perf_counter()
    count = tau(g, used)
    elapsed = (time.perf_counter() - t0) * 1000
    doc = {
        "command": "count",
        "input": _summary(g),
        "algorithm": used.value,
        "result": {"count": str(count)},
        "elapsed_ms": round(elapsed, 3),
    }
    _emit(args, doc, [str(count)])
    return EXIT_OK


def cmd_chromatic(args) -> int:
    g = _load(args.file)
    t0 = time.perf_counter()
    p = chromatic_polynomial(g)
    evals = {str(k): str(evaluate(p, k)) for k in args.eval}
    elapsed = (time.perf_counter() - t0) * 1000
    doc = {
        "command": "chromatic",
        "input": _summary(g),
        "algorithm": "deletion-minus-contraction",
        "result": {"coefficients": [str(c) for c in p.coeffs], "evaluations": evals},
        "elapsed_ms": round(elapsed, 3),
    }
    lines = [f"chi(k) = {p}", "coefficients: " + " ".join(str(c) for c in p.coeffs) if p.coeffs else "coefficients:"]
    lines += [f"chi({k}) = {v}" for k, v in evals.items()]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_currents(args) -> int:
    g = _load(args.file)
    try:
        total = Fraction(args.total)
    except (ValueError, ZeroDivisionError):
        print(f"error: --total must be a rational P/Q, got {args.total!r}", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    sol = edge_currents(g, args.source, args.sink, total)
    ok = verify_kirchhoff(g, sol)
    elapsed = (time.perf_counter() - t0) * 1000
    rows = [
        {"from": e.tail, "to": e.head, "copy": e.copy, "current": format_fraction(i)}
        for e, i in sol.currents.items()
    ]
    doc = {
        "command": "currents",
        "input": _summary(g),
        "algorithm": "tree-classification",
        "result": {
            "source": sol.source,
            "sink": sol.sink,
            "total": format_fraction(total),
            "currents": rows,
            "kirchhoff_ok": ok,
        },
        "elapsed_ms": round(elapsed, 3),
    }
    lines = [f"{r['from']} -> {r['to']} #{r['copy']}: {r['current']}" for r in rows]
    lines.append("kirchhoff: " + ("OK" if ok else "FAILED"))
    _emit(args, doc, lines)
    return EXIT_OK if ok else EXIT_FAILED


def _flag(value) -> str:
    return "n/a" if value is None else ("OK" if value else "FAILED")


def cmd_family(args) -> int:
    kind = FamilyKind(args.kind)
    if args.n < 1 or (args.m is not None and args.m < 1):
        print("error: --n and --m must be positive", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    if args.verify:
        report = verify_family(kind, args.n, args.m)
        values = report.values
    else:
        report = None
        values = [tau(family_graph(kind, i, args.m)) for i in range(1, args.n + 1)]
    elapsed = (time.perf_counter() - t0) * 1000
    result: dict = {"kind": kind.value, "table": [{"n": i, "tau": str(v)} for i, v in enumerate(values, 1)]}
    if args.m is not None:
        result["m"] = args.m
    if report is not None:
        result["report"] = {
            "name": report.name,
            "recurrence_ok": report.recurrence_ok,
            "closed_form_ok": report.closed_form_ok,
            "failures": report.failures,
        }
    doc = {
        "command": "family",
        "input": {"kind": kind.value, "n": args.n, "m": args.m},
        "algorithm": Algorithm.AUTO.value,
        "result": result,
        "elapsed_ms": round(elapsed, 3),
    }
    lines = [f"{i}\t{v}" for i, v in enumerate(values, 1)]
    lines.append(",".join(str(v) for v in values))
    if report is not None:
        lines.append(f"recurrence: {_flag(report.recurrence_ok)}")
        lines.append(f"closed form: {_flag(report.closed_form_ok)}")
        lines += [f"failed: {f}" for f in report.failures]
    _emit(args, doc, lines)
    return EXIT_OK if report is None or report.ok else EXIT_FAILED


def selfcheck(seed: int, cases: int) -> tuple[list[dict], int]:
    """Cross-check the three counting algorithms on a seeded random corpus."""
    rows = []
    bad = 0
    for i, g in enumerate(corpus(seed, cases)):
        e = oracle.count_trees_bruteforce(g)
        d = tau_dc(g)[0]
        m = matrixtree.tau_mt(g)
        agree = e == d == m
        bad += not agree
        rows.append({"case": i, "vertices": g.n, "edges": g.total_edges, "enum": e, "dc": d, "matrix": m, "agree": agree})
    return rows, bad


def cmd_selfcheck(args) -> int:
    if args.cases < 0:
        print("error: --cases must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    rows, bad = selfcheck(args.seed, args.cases)
    elapsed = (time.perf_counter() - t0) * 1000
    doc = {
        "command": "selfcheck",
        "input": {"seed": args.seed, "cases": args.cases},
        "algorithm": "enum,dc,matrix",
        "result": {
            "agree": args.cases - bad,
            "disagree": bad,
            "cases": [{k: (str(v) if k in ("enum", "dc", "matrix") else v) for k, v in r.items()} for r in rows],
        },
        "elapsed_ms": round(elapsed, 3),
    }
    lines = []
    if args.verbose:
        lines += [
            f"case {r['case']}: n={r['vertices']} e={r['edges']} enum={r['enum']} dc={r['dc']} matrix={r['matrix']}"
            for r in rows
        ]
    lines += [
        f"MISMATCH case {r['case']}: enum={r['enum']} dc={r['dc']} matrix={r['matrix']}" for r in rows if not r["agree"]
    ]
    total = sum(r["enum"] for r in rows)
    lines.append(f"selfcheck seed={args.seed} cases={args.cases}: {args.cases - bad} agree, {bad} disagree, sum tau={total}")
    _emit(args, doc, lines)
    return EXIT_OK if bad == 0 else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spantree", description="Exact spanning-tree counts and friends.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of spanning trees")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--algorithm", default="auto", choices=[a.value for a in Algorithm])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("chromatic", help="chromatic polynomial")
    p.add_argument("file")
    p.add_argument("--eval", type=int, action="append", default=[], metavar="K")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("currents", help="currents in a unit-resistor network")
    p.add_argument("file")
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--sink", type=int, required=True)
    p.add_argument("--total", default="1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_currents)

    p = sub.add_parser("family", help="tree counts of a graph family")
    p.add_argument("kind", choices=[k.value for k in FamilyKind] + ["fan-prime"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("selfcheck", help="cross-check the counting algorithms on random graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
