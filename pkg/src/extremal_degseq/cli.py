"""Command line entry point.

Exit codes: 0 all PASS, 1 some FAIL, 2 usage or domain error, 3 a near-tie
left a verdict inconclusive.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from math import comb

from ._numeric import to_plain
from .functions import SpecSyntaxError, check_class_f, check_class_g, parse_spec
from .graphs import (degree_sequence, is_threshold, make_quasi_complete, make_quasi_star,
                     threshold_from_creation_sequence)
from .oracle import (ALL_GRAPHICAL, THRESHOLD_ONLY, find_extremal, verify_isolated_vertex_lemma,
                     verify_unique_quasi_complete, verify_unique_quasi_star)
from .report import render
from .sparse import ROOT_TOL, AnalysisError, find_epsilon_window

THREADS_ENV = "EXTREMAL_DEGSEQ_THREADS"

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

VERDICT_COLUMNS = ["check", "spec", "n", "m", "status", "optimum", "expected", "found", "detail"]
T8_COLUMNS = ["q", "m_q", "peak", "peak_bound", "peak_below_bound", "root", "sample_eps",
              "clique_wins", "status", "detail"]
EXTREMAL_COLUMNS = ["objective", "n", "m", "mode", "oracle", "optimum", "optimal_sequences",
                    "unique", "near_ties", "note"]
CLASS_COLUMNS = ["family", "spec", "member", "checked_up_to", "centered_ok", "convexity_ok",
                 "star_inequality_ok", "concavity_ok", "increasing_ok",
                 "increment_inequality_ok", "first_failure", "ties", "inconclusive"]
CONSTRUCT_COLUMNS = ["kind", "n", "m", "degrees", "conjugate", "threshold", "edges"]

CSV_HELP = """\
CSV columns (one row per cell):
  construct    {construct}
  check-class  {klass}
  verify t5|t11|lemma-iso  {verdict}
  verify t8    {t8}
  extremal     {extremal}
Sequences inside a cell are space-separated; several sequences are joined by ';'.
""".format(construct=",".join(CONSTRUCT_COLUMNS), klass=",".join(CLASS_COLUMNS),
           verdict=",".join(VERDICT_COLUMNS), t8=",".join(T8_COLUMNS),
           extremal=",".join(EXTREMAL_COLUMNS))


def parse_range(text: str) -> range:
    """``"4..9"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N or A..B") from None


def _spec_arg(text: str) -> str:
    try:
        parse_spec(text)
    except SpecSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="extremal-degseq",
        description="Extremal degree-sum problems over graphs with n vertices and m edges.",
        epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--jobs", type=int, default=None,
                        help=f"worker processes (default: ${THREADS_ENV} or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build QS, QK or a threshold graph")
    c.add_argument("kind", choices=["qs", "qk", "threshold"])
    c.add_argument("args", nargs="+", help="n m for qs/qk; a creation string of i/d for threshold")

    k = sub.add_parser("check-class", parents=[common], help="finite-range membership in the classes F and G")
    k.add_argument("spec", type=_spec_arg)
    k.add_argument("--K", type=int, default=10_000)

    v = sub.add_parser("verify", parents=[common], help="sweep a uniqueness statement over a grid of cells")
    v.add_argument("check", choices=["t5", "t11", "lemma-iso", "t8"])
    v.add_argument("--f", "--g", dest="spec", type=_spec_arg)
    v.add_argument("--n", type=parse_range)
    v.add_argument("--m", type=parse_range)
    v.add_argument("--q", type=parse_range, default=range(4, 11))
    v.add_argument("--oracle", choices=[ALL_GRAPHICAL, THRESHOLD_ONLY])

    e = sub.add_parser("extremal", parents=[common], help="optimal degree sequences for one cell")
    e.add_argument("--f", "--g", dest="spec", type=_spec_arg, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--mode", choices=["max", "min"], default="max")
    e.add_argument("--oracle", choices=[ALL_GRAPHICAL, THRESHOLD_ONLY], default=ALL_GRAPHICAL)
    return p


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    return max(1, int(os.environ.get(THREADS_ENV, "1")))


def _fan_out(fn, cells, jobs):
    if jobs <= 1 or len(cells) <= 1:
        return [fn(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, cells))


def _exit_code(statuses) -> int:
    statuses = list(statuses)
    if "FAIL" in statuses:
        return EXIT_FAIL
    if "INCONCLUSIVE" in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def cmd_construct(args):
    if args.kind == "threshold":
        if len(args.args) != 1:
            raise ValueError("threshold takes a single creation string")
        g = threshold_from_creation_sequence(args.args[0])
    else:
        if len(args.args) != 2:
            raise ValueError(f"{args.kind} takes n and m")
        n, m = map(int, args.args)
        g = (make_quasi_star if args.kind == "qs" else make_quasi_complete)(n, m)
    ds = degree_sequence(g)
    row = {"kind": args.kind, "n": g.n, "m": g.m, "degrees": list(ds.d),
           "conjugate": list(ds.conjugate), "threshold": is_threshold(g),
           "edges": [list(e) for e in g.edges()]}
    if args.format == "text":
        out = (f"degrees: {' '.join(map(str, ds.d))}\n"
               f"conjugate: {' '.join(map(str, ds.conjugate))}\n"
               f"threshold: {'yes' if row['threshold'] else 'no'}\n"
               f"adjacency:\n{g}\n")
    elif args.format == "csv":
        out = render([row], CONSTRUCT_COLUMNS, "csv")
    else:
        out = render([row], CONSTRUCT_COLUMNS, "json")
    return out, EXIT_PASS


def _witness_dict(w):
    if w is None:
        return None
    return {"condition": w.condition, "k": w.k, "lhs": to_plain(w.lhs), "rhs": to_plain(w.rhs)}


def class_report_row(rep) -> dict:
    return {
        "family": rep.family, "spec": rep.spec, "member": rep.member,
        "checked_up_to": rep.checked_up_to, "centered_ok": rep.centered_ok,
        "convexity_ok": rep.convexity_ok, "star_inequality_ok": rep.star_inequality_ok,
        "concavity_ok": rep.concavity_ok, "increasing_ok": rep.increasing_ok,
        "increment_inequality_ok": rep.increment_inequality_ok,
        "first_failure": _witness_dict(rep.first_failure),
        "ties": [_witness_dict(w) for w in rep.ties],
        "inconclusive": rep.inconclusive,
    }


def cmd_check_class(args):
    spec = parse_spec(args.spec)
    reports = [check_class_f(spec, args.K), check_class_g(spec, args.K)]
    rows = [class_report_row(r) for r in reports]
    if args.format == "text":
        lines = []
        for r in reports:
            verdict = "yes" if r.member else "no"
            line = f"{r.family}: {verdict} (verified up to {r.checked_up_to})"
            if r.first_failure:
                w = r.first_failure
                line += f"; first failure: {w.condition} at k={w.k}"
            if r.ties:
                line += "; equality at " + ", ".join(f"{w.condition} k={w.k}" for w in r.ties[:3])
            if r.inconclusive:
                line += "; near-tie on a strict inequality"
            lines.append(line)
        out = "\n".join(lines) + "\n"
    elif args.format == "csv":
        flat = [{**r, "first_failure": r["first_failure"] and
                 f"{r['first_failure']['condition']}@{r['first_failure']['k']}",
                 "ties": [f"{t['condition']}@{t['k']}" for t in r["ties"]]} for r in rows]
        out = render(flat, CLASS_COLUMNS, "csv")
    else:
        out = render(rows, CLASS_COLUMNS, "json")
    if any(r.inconclusive for r in reports):
        code = EXIT_INCONCLUSIVE
    else:
        code = EXIT_PASS if any(r.member for r in reports) else EXIT_FAIL
    return out, code


def _verify_cell(cell):
    check, text, n, m, oracle = cell
    spec = parse_spec(text)
    if check == "t5":
        v = verify_unique_quasi_star(spec, n, m, oracle or ALL_GRAPHICAL)
    elif check == "t11":
        v = verify_unique_quasi_complete(spec, n, m, oracle or THRESHOLD_ONLY)
    else:
        v = verify_isolated_vertex_lemma(spec, n, m, oracle or ALL_GRAPHICAL)
    return v.to_dict()


def _t8_cell(q):
    try:
        w = find_epsilon_window(q)
    except AnalysisError as exc:
        return {"q": q, "status": "FAIL", "detail": str(exc)}
    wins = all(s.clique_wins for s in w.samples)
    return {"q": q, "m_q": w.m_q, "peak": w.peak, "peak_bound": w.peak_bound,
            "peak_below_bound": w.peak_bound - w.peak > ROOT_TOL, "root": w.root,
            "sample_eps": [s.eps for s in w.samples], "clique_wins": wins,
            "status": "PASS" if wins else "FAIL"}


def cmd_verify(args):
    jobs = _jobs(args)
    if args.check == "t8":
        rows = _fan_out(_t8_cell, list(args.q), jobs)
        meta = {"command": "verify t8", "scope": f"verified for q in {args.q.start}..{args.q.stop - 1}"}
        return render(rows, T8_COLUMNS, args.format, meta), _exit_code(r["status"] for r in rows)
    if args.spec is None or args.n is None:
        raise ValueError(f"verify {args.check} needs a function (--f/--g) and --n")
    cells = []
    for n in args.n:
        top = n - 1 if args.check == "t5" else comb(n, 2)
        ms = args.m if args.m is not None else range(0, top + 1)
        cells += [(args.check, args.spec, n, m, args.oracle) for m in ms if 0 <= m <= comb(n, 2)]
    rows = _fan_out(_verify_cell, cells, jobs)
    meta = {"command": f"verify {args.check}", "spec": args.spec,
            "scope": f"verified up to n = {max(args.n)}"}
    return render(rows, VERDICT_COLUMNS, args.format, meta), _exit_code(r["status"] for r in rows)


def cmd_extremal(args):
    report = find_extremal(parse_spec(args.spec), args.n, args.m, args.mode, args.oracle)
    row = report.to_dict()
    if args.format != "json":
        row = {**row, "near_ties": [t["sequence"] for t in row["near_ties"]]}
    code = EXIT_INCONCLUSIVE if report.near_ties else EXIT_PASS
    return render([row], EXTREMAL_COLUMNS, args.format), code


COMMANDS = {"construct": cmd_construct, "check-class": cmd_check_class,
            "verify": cmd_verify, "extremal": cmd_extremal}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = COMMANDS[args.command](args)
    except (ValueError, SpecSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
