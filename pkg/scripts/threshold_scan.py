#!/usr/bin/env python3
"""Scan the threshold root x0 over an alpha grid and report gap counts.

Two experiments in one script:

1. For each alpha on a grid in (1, 2), solve the threshold function for its
   positive root in both normalizations and tabulate. The root should grow
   with alpha; a violation is printed as a warning because it would point
   at a bracketing bug rather than at mathematics.

2. For n up to the counting ceiling, compare the exact number of primes in
   the gap (p_{n+1}, p_1 ... p_{n+1}) with both candidate lower bounds, n
   and [n^alpha].

Example:
    python scripts/threshold_scan.py --alpha-step 0.1 --max-n 8
    python scripts/threshold_scan.py --csv /tmp/thresholds.csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from primorial_gap.bigmath import primorial
from primorial_gap.bounds import ThresholdForm, floor_power, solve_x0
from primorial_gap.errors import NoRootError, ResourceLimitError
from primorial_gap.primes import PrimeEngine


@dataclass
class ScanConfig:
    alpha_lo: float
    alpha_hi: float
    alpha_step: float
    max_n: int
    count_alpha: float
    csv_path: str | None
    cache_dir: str | None


def parse_args(argv=None) -> ScanConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alpha-lo", type=float, default=1.05)
    parser.add_argument("--alpha-hi", type=float, default=1.95)
    parser.add_argument("--alpha-step", type=float, default=0.05)
    parser.add_argument("--max-n", type=int, default=8, help="gap counts up to this n (<= 11)")
    parser.add_argument("--count-alpha", type=float, default=1.1)
    parser.add_argument("--csv", dest="csv_path", default=None, help="write the alpha grid as CSV")
    parser.add_argument("--cache-dir", default=None)
    args = parser.parse_args(argv)
    return ScanConfig(
        alpha_lo=args.alpha_lo,
        alpha_hi=args.alpha_hi,
        alpha_step=args.alpha_step,
        max_n=args.max_n,
        count_alpha=args.count_alpha,
        csv_path=args.csv_path,
        cache_dir=args.cache_dir,
    )


def alpha_grid(config: ScanConfig) -> list[float]:
    grid = []
    steps = int(round((config.alpha_hi - config.alpha_lo) / config.alpha_step))
    for i in range(steps + 1):
        alpha = round(config.alpha_lo + i * config.alpha_step, 10)
        if 1.0 < alpha < 2.0:
            grid.append(alpha)
    return grid


def scan_roots(config: ScanConfig) -> list[dict]:
    rows = []
    for alpha in alpha_grid(config):
        row = {"alpha": alpha}
        for form in (ThresholdForm.UNIT, ThresholdForm.SCALED):
            try:
                profile = solve_x0(alpha, form)
                row[form.value] = profile.x0
            except (NoRootError, ResourceLimitError) as exc:
                row[form.value] = None
                row[f"{form.value}_note"] = str(exc)
        rows.append(row)
    return rows


def main(argv=None) -> int:
    config = parse_args(argv)
    engine = PrimeEngine(cache_dir=config.cache_dir)

    rows = scan_roots(config)
    print(f"{'alpha':>6}  {'x0 (unit form)':>18}  {'x0 (scaled form)':>18}")
    previous = None
    for row in rows:
        unit = row.get("unit")
        scaled = row.get("scaled")
        unit_s = f"{unit:18.6f}" if unit is not None else f"{'-':>18}"
        scaled_s = f"{scaled:18.6f}" if scaled is not None else f"{'-':>18}"
        print(f"{row['alpha']:6.2f}  {unit_s}  {scaled_s}")
        if unit is not None and previous is not None and unit < previous:
            print(f"warning: unit-form x0 decreased at alpha={row['alpha']}", file=sys.stderr)
        if unit is not None:
            previous = unit

    if config.csv_path:
        with open(config.csv_path, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=["alpha", "unit", "scaled"], extrasaction="ignore")
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {config.csv_path}")

    max_n = min(config.max_n, 11)
    alpha = config.count_alpha
    print(f"\ngap counts vs lower bounds (alpha = {alpha}):")
    print(f"{'n':>3}  {'count':>14}  {'n':>6}  {'[n^a]':>8}")
    for n in range(1, max_n + 1):
        big = primorial(n + 1, engine)
        count = engine.pi_fast(big - 1) - (n + 1)
        bound = floor_power(n, alpha)
        flag = "" if count >= max(n, bound) else "  <-- below bound"
        print(f"{n:>3}  {count:>14}  {n:>6}  {bound:>8}{flag}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
