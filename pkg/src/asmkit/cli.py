"""Command-line front end: suites, counting, tables, serialized reports.

Exit codes: 0 when no check failed (findings do not fail a run), 1 when
at least one entry is a "fail", 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from typing import List, Optional

from .mt import count_mt, enumerate_mt
from .refined import a_numbers, b_numbers, bstar_numbers, cd_numbers
from .report import VerificationReport, emit_report, render_figures, \
    render_value
from .suites import (
    DEFAULT_BOUNDS,
    SUITES,
    SUITE_NAMES,
    Job,
    run_jobs,
    suite_jobs,
)

THREADS_ENV = "ASMKIT_THREADS"


def _threads(value: Optional[int]) -> int:
    """Worker count: flag, then environment, then available parallelism."""
    if value is not None:
        return max(1, value)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise SystemExit(
                f"{THREADS_ENV} must be an integer, got {env!r}")
    return max(1, os.cpu_count() or 1)


def _resolve_bounds(suite_name: str, args):
    base = DEFAULT_BOUNDS[suite_name]
    size = next((v for v in (args.size, args.max_vars, args.n,
                             args.max_len) if v is not None), None)
    kw = {}
    if size is not None:
        kw["size"] = size
    if args.depth is not None:
        kw["depth"] = args.depth
    if args.seeds is not None:
        kw["seeds"] = args.seeds
    if args.seed is not None:
        kw["seed"] = args.seed
    return replace(base, **kw) if kw else base


def _family_matches(jb: Job, family: str) -> bool:
    kwargs = dict(jb.kwargs)
    return kwargs.get("family") == family or kwargs.get("which") == family


def _collect_jobs(args) -> List[Job]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    jobs: List[Job] = []
    for sub in names:
        jobs.extend(suite_jobs(sub, _resolve_bounds(sub, args)))
    if args.family:
        jobs = [jb for jb in jobs if _family_matches(jb, args.family)]
    return jobs


def _print_timing(report: VerificationReport) -> None:
    per = {}
    for e in report.entries:
        per[e.check_id] = per.get(e.check_id, 0) + e.elapsed_ms
    for cid in sorted(per):
        print(f"{cid}: {per[cid]} ms", file=sys.stderr)
    print(f"total: {report.total_elapsed_ms()} ms", file=sys.stderr)


def cmd_verify(args) -> int:
    report = run_jobs(_collect_jobs(args), workers=_threads(args.threads))
    sys.stdout.write(report.to_text())
    if args.timing:
        _print_timing(report)
    return 1 if report.has_failures() else 0


def cmd_count(args) -> int:
    try:
        bottom = tuple(int(x) for x in args.bottom.split(","))
    except ValueError:
        raise SystemExit("--bottom must be a comma-separated integer list")
    filtered = (args.top is not None or args.left_eq is not None
                or args.patterns)
    if not filtered:
        print(count_mt(bottom))
        return 0
    ts = enumerate_mt(bottom)
    if args.top is not None:
        ts = [t for t in ts if t.top_entry == args.top]
    if args.left_eq is not None:
        ts = [t for t in ts if t.left_diag_eq_first() == args.left_eq]
    if args.patterns:
        for t in ts:
            print(" | ".join(",".join(str(x) for x in row)
                             for row in t.rows))
    print(len(ts))
    return 0


def cmd_numbers(args) -> int:
    if args.family == "A":
        values = a_numbers(args.n).values
    elif args.family == "B":
        values = b_numbers(args.n).values
    elif args.family == "Bstar":
        values = bstar_numbers(args.n).values
    else:
        values = cd_numbers(args.n, args.d, args.family).values
    for i in sorted(values):
        print(f"{i}\t{render_value(values[i])}")
    return 0


def cmd_report(args) -> int:
    if not args.json and not args.csv:
        raise SystemExit("report needs --json PATH and/or --csv PATH")
    report = run_jobs(_collect_jobs(args), workers=_threads(args.threads))
    written = []
    if args.json:
        emit_report(report, "json", args.json)
        written.append(args.json)
    if args.csv:
        emit_report(report, "csv", args.csv)
        written.append(args.csv)
    written.extend(render_figures(report, written[0]))
    for path in written:
        print(path)
    if args.timing:
        _print_timing(report)
    return 1 if report.has_failures() else 0


def _add_suite_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--size", type=int, help="main structural bound")
    p.add_argument("--max-vars", type=int, dest="max_vars",
                   help="alias for --size (kernel variable count)")
    p.add_argument("--n", type=int, help="alias for --size (order bound)")
    p.add_argument("--max-len", type=int, dest="max_len",
                   help="alias for --size (word length bound)")
    p.add_argument("--depth", type=int, help="secondary bound")
    p.add_argument("--seeds", type=int,
                   help="randomized repetitions per check")
    p.add_argument("--seed", type=int,
                   help="base RNG seed, recorded in randomized entries")
    p.add_argument("--family", choices=("A", "B", "B-alt"),
                   help="restrict system checks to one family")
    p.add_argument("--threads", type=int,
                   help=f"worker processes (default: {THREADS_ENV} "
                        "or available parallelism)")
    p.add_argument("--timing", action="store_true",
                   help="per-check timing on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asmkit",
        description="exact verification suites for alternating sign "
                    "matrix identities")
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run one suite, text report on "
                                       "stdout")
    pv.add_argument("suite", choices=SUITE_NAMES)
    _add_suite_flags(pv)
    pv.set_defaults(fn=cmd_verify)

    pc = sub.add_parser("count", help="count monotone triangles")
    pc.add_argument("object", choices=("mt",))
    pc.add_argument("--bottom", required=True,
                    help="comma-separated strictly increasing bottom row")
    pc.add_argument("--top", type=int, help="restrict to one apex entry")
    pc.add_argument("--left-eq", type=int, dest="left_eq",
                    help="restrict by the left-diagonal statistic")
    pc.add_argument("--patterns", action="store_true",
                    help="print each triangle, one per line")
    pc.set_defaults(fn=cmd_count)

    pn = sub.add_parser("numbers", help="print one refined family table")
    pn.add_argument("--family", required=True,
                    choices=("A", "B", "Bstar", "C", "D"))
    pn.add_argument("--n", type=int, required=True)
    pn.add_argument("--d", type=int, default=2,
                    help="difference order for C/D (default 2)")
    pn.set_defaults(fn=cmd_numbers)

    pr = sub.add_parser(
        "report", help="run a suite and write delimited files plus "
                       "summary figures")
    pr.add_argument("suite", nargs="?", default="all", choices=SUITE_NAMES)
    pr.add_argument("--json", help="write the JSON report here")
    pr.add_argument("--csv", help="write the CSV report here")
    _add_suite_flags(pr)
    pr.set_defaults(fn=cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
