"""Command line front end for the inequality verification suite.

Subcommands
-----------
list       enumerate the registered inequality specs
verify     scan one spec over an n range, report failures and onset
suite      run every spec over its full feasible range within a budget
theorem    exact gap counts for the linear or the power lower bound
x0         threshold root of the gap criterion, both normalizations
pi         prime counting, exact or sublinear
primorial  exact product of the first n primes

Exit status: 0 when everything requested holds, 1 when a scanned claim
fails or a scan was skipped for budget, 2 on usage, domain, or resource
errors. JSON output is deterministic except for the elapsed_ms field.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time

from .bigmath import primorial
from .bounds import ThresholdForm, solve_x0
from .errors import DomainError, NoRootError, PrecisionError, ResourceLimitError
from .primes import PrimeEngine
from .registry import (
    registry,
    run_suite,
    verify,
    verify_theorem_alpha,
    verify_theorem_linear,
)


def _emit_json(doc, stream=None) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True), file=stream or sys.stdout)


def _suite_row(report) -> dict:
    doc = report.to_json_dict()
    return doc


def _claim_consistent(report, claimed_from: int | None) -> bool:
    """A full-range scan confirms a claim when the observed onset is at or
    before the claimed one; existence-only claims just need an onset."""
    if report.status != "ok":
        return False
    if report.first_hold_onward is None:
        return False
    if claimed_from is None:
        return True
    return report.first_hold_onward <= claimed_from


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    except ValueError as exc:
        raise DomainError(f"range must look like LO..HI, got {text!r}") from exc
    return lo, hi


def _make_engine(args) -> PrimeEngine:
    return PrimeEngine(cache_dir=args.cache_dir)


def cmd_list(args) -> int:
    engine = _make_engine(args)
    specs = registry(engine)
    rows = [
        {
            "id": s.id,
            "description": s.description,
            "claimed_from": s.claimed_from,
            "min_n": s.min_n,
            "feasible_max": s.feasible_max,
        }
        for s in specs
    ]
    if args.output == "human":
        width = max(len(r["id"]) for r in rows)
        for r in rows:
            claimed = "-" if r["claimed_from"] is None else str(r["claimed_from"])
            print(f"{r['id']:<{width}}  from {claimed:>5}  max {r['feasible_max']:>8}  {r['description']}")
    else:
        _emit_json({"specs": rows})
    return 0


def cmd_verify(args) -> int:
    engine = _make_engine(args)
    lo, hi = _parse_range(args.range)
    deadline = time.perf_counter() + args.budget_secs if args.budget_secs else None
    report = verify(args.spec_id, lo, hi, engine, deadline=deadline)
    if args.per_n:
        failed = set(report.failures)
        with open(args.per_n, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["n", "holds"])
            if report.status == "ok":
                for n in range(lo, hi + 1):
                    writer.writerow([n, int(n not in failed)])
    doc = report.to_json_dict()
    if args.output == "human":
        verdict = "holds" if report.all_hold else ("skipped" if report.status == "skipped" else "FAILS")
        print(f"{report.id} on [{lo}, {hi}]: {verdict}")
        if report.failures:
            print(f"  failures: {report.failures}")
        print(f"  first_hold_onward: {report.first_hold_onward}")
    elif args.output == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["id", "lo", "hi", "all_hold", "failures", "first_hold_onward", "status"])
        writer.writerow(
            [
                report.id,
                lo,
                hi,
                int(report.all_hold),
                ";".join(map(str, report.failures)),
                "" if report.first_hold_onward is None else report.first_hold_onward,
                report.status,
            ]
        )
    else:
        _emit_json(doc)
    if report.status != "ok":
        return 1
    return 0 if report.all_hold else 1


def cmd_suite(args) -> int:
    engine = _make_engine(args)
    spec_ids = args.ids.split(",") if args.ids else None
    specs = {s.id: s for s in registry(engine)}
    reports = run_suite(engine, budget_secs=args.budget_secs, spec_ids=spec_ids)
    rows = []
    ok = True
    for report in reports:
        claimed = specs[report.id].claimed_from
        consistent = _claim_consistent(report, claimed)
        ok = ok and consistent
        row = _suite_row(report)
        row["claimed_from"] = claimed
        row["consistent_with_claim"] = consistent
        rows.append(row)
    if args.output == "human":
        width = max(len(r["id"]) for r in rows)
        for r in rows:
            mark = "ok " if r["consistent_with_claim"] else ("SKIP" if r["status"] == "skipped" else "FAIL")
            onset = r["first_hold_onward"]
            claimed = r["claimed_from"]
            print(
                f"{mark:<4} {r['id']:<{width}}  onset {str(onset):>6}  claimed {str(claimed):>6}  "
                f"({r['elapsed_ms']:.0f} ms)"
            )
    else:
        _emit_json({"reports": rows, "all_consistent": ok})
    return 0 if ok else 1


def cmd_theorem(args) -> int:
    engine = _make_engine(args)
    if args.alpha is not None:
        report = verify_theorem_alpha(args.alpha, args.max, engine, tol=args.tol)
    else:
        report = verify_theorem_linear(args.max, engine)
    if args.output == "human":
        counts = report.detail["counts"]
        required = report.detail["required"]
        for key in sorted(counts, key=int):
            need = required[key]
            got = counts[key]
            mark = "ok" if got >= need else "FAIL"
            print(f"n = {key:>2}: {got} primes in the gap, need {need}  [{mark}]")
        if report.detail.get("vacuous"):
            print("no n in range carries a claim (below the threshold root)")
    else:
        _emit_json(report.to_json_dict())
    return 0 if report.all_hold else 1


def cmd_x0(args) -> int:
    forms = {}
    for form in (ThresholdForm.UNIT, ThresholdForm.SCALED):
        try:
            profile = solve_x0(args.alpha, form, tol=args.tol)
            forms[form.value] = {
                "x0": profile.x0,
                "x1": profile.x1,
                "bracket": [profile.bracket[0], profile.bracket[1]],
                "tol": profile.tol,
            }
        except NoRootError as exc:
            forms[form.value] = {"x0": None, "note": str(exc)}
    doc = {"alpha": args.alpha, "forms": forms}
    if args.output == "human":
        for name, row in forms.items():
            if row.get("x0") is None:
                print(f"{name}: no positive root ({row['note']})")
            else:
                print(f"{name}: x0 = {row['x0']:.12f}  (stationary x1 = {row['x1']:.6f})")
    else:
        _emit_json(doc)
    return 0


def cmd_pi(args) -> int:
    engine = _make_engine(args)
    x = args.x
    method = args.method
    if method == "auto":
        method = "exact" if x <= engine.exact_cap else "fast"
    value = engine.pi_exact(x) if method == "exact" else engine.pi_fast(x)
    doc = {"x": x, "pi": value, "method": method}
    if args.output == "human":
        print(f"pi({x}) = {value}  [{method}]")
    else:
        _emit_json(doc)
    return 0


def cmd_primorial(args) -> int:
    engine = _make_engine(args)
    value = primorial(args.n, engine)
    doc = {"n": args.n, "primorial": str(value), "digits": len(str(value))}
    if args.output == "human":
        print(value)
    else:
        _emit_json(doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=("json", "csv", "human"),
        default="json",
        help="output format (default json)",
    )
    common.add_argument(
        "--cache-dir",
        default=None,
        help="directory for persisted prime tables (default: PRIMORIAL_GAP_CACHE or ./.cache)",
    )
    parser = argparse.ArgumentParser(
        prog="primorial-gap",
        description="Verify prime gap and primorial inequalities over explicit ranges.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", parents=[common], help="enumerate registered inequality specs")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("verify", parents=[common], help="scan one spec over an n range")
    p.add_argument("spec_id", help="spec id as shown by list")
    p.add_argument("--range", required=True, help="inclusive n range, LO..HI")
    p.add_argument("--per-n", default=None, metavar="FILE", help="write per-n CSV of verdicts")
    p.add_argument("--budget-secs", type=float, default=300.0, help="abort to skipped past this many seconds")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suite", parents=[common], help="run all specs over full feasible ranges")
    p.add_argument("--ids", default=None, help="comma separated subset of spec ids")
    p.add_argument("--budget-secs", type=float, default=300.0, help="total time budget")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("theorem", parents=[common], help="exact gap counts for the main bounds")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--linear", action="store_true", help="check the count >= n bound")
    group.add_argument("--alpha", type=float, default=None, help="check the count >= [n^alpha] bound")
    p.add_argument("--max", type=int, default=5, help="largest n to count (feasible up to 11)")
    p.add_argument("--tol", type=float, default=1e-9, help="bisection tolerance for the threshold root")
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("x0", parents=[common], help="threshold root for a given alpha, both forms")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_x0)

    p = sub.add_parser("pi", parents=[common], help="count primes up to x")
    p.add_argument("x", type=int)
    p.add_argument("--method", choices=("auto", "exact", "fast"), default="auto")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("primorial", parents=[common], help="product of the first n primes")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_primorial)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "alpha", None) is not None and args.command in ("theorem", "x0"):
        if not 1.0 < args.alpha < 2.0 or not math.isfinite(args.alpha):
            print("alpha must lie in the open interval (1, 2)", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (DomainError, ResourceLimitError, PrecisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
