#!/usr/bin/env python3
"""Run the full inequality suite and print an onset summary table.

Example:
    python scripts/run_suite.py --budget-secs 120
    python scripts/run_suite.py --ids bonse2,robin,zhang --output json
"""

import argparse
import json
import sys
from dataclasses import dataclass

from primorial_gap.primes import PrimeEngine
from primorial_gap.registry import registry, run_suite


@dataclass
class SuiteConfig:
    budget_secs: float
    ids: list[str] | None
    output: str
    cache_dir: str | None


def parse_args(argv=None) -> SuiteConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget-secs", type=float, default=300.0)
    parser.add_argument("--ids", default=None, help="comma separated spec ids")
    parser.add_argument("--output", choices=("human", "json"), default="human")
    parser.add_argument("--cache-dir", default=None)
    args = parser.parse_args(argv)
    return SuiteConfig(
        budget_secs=args.budget_secs,
        ids=args.ids.split(",") if args.ids else None,
        output=args.output,
        cache_dir=args.cache_dir,
    )


def main(argv=None) -> int:
    config = parse_args(argv)
    engine = PrimeEngine(cache_dir=config.cache_dir)
    claimed = {s.id: s.claimed_from for s in registry(engine)}
    reports = run_suite(engine, budget_secs=config.budget_secs, spec_ids=config.ids)

    if config.output == "json":
        rows = []
        for report in reports:
            row = report.to_json_dict()
            row["claimed_from"] = claimed[report.id]
            rows.append(row)
        print(json.dumps({"reports": rows}, indent=2, sort_keys=True))
    else:
        width = max(len(r.id) for r in reports)
        print(f"{'spec':<{width}}  {'claimed':>8}  {'observed':>8}  {'range':>14}  {'time':>8}")
        for r in reports:
            c = claimed[r.id]
            claimed_s = "-" if c is None else str(c)
            onset_s = "-" if r.first_hold_onward is None else str(r.first_hold_onward)
            range_s = f"[{r.range_checked[0]}, {r.range_checked[1]}]"
            time_s = "skip" if r.status == "skipped" else f"{r.elapsed:7.2f}s"
            print(f"{r.id:<{width}}  {claimed_s:>8}  {onset_s:>8}  {range_s:>14}  {time_s:>8}")

    bad = [
        r.id
        for r in reports
        if r.status != "ok"
        or r.first_hold_onward is None
        or (claimed[r.id] is not None and r.first_hold_onward > claimed[r.id])
    ]
    if bad:
        print(f"inconsistent or unfinished: {', '.join(bad)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
