#!/usr/bin/env python3
"""Run the whole identity battery and print one line per check.

Usage:
  python scripts/verify_identities.py [--order 30] [--congruence-order 200]

Exits 1 if any check fails.  Note that the vanishing-at-multiples
congruence check reports a genuine counterexample (t=2, n=6), so a
nonzero exit is the expected, honest outcome; see the README.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from coretower import (  # noqa: E402
    check_congruence,
    check_recursion,
    compare_series,
    defect_series,
    defect_series_brute,
    generalized_core_series,
    generalized_core_series_brute,
    monotonicity_check,
    row_weight_series,
    row_weight_series_brute,
    telescoped_row_weight_check,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=30,
                        help="truncation order for enumeration-backed checks")
    parser.add_argument("--congruence-order", type=int, default=200,
                        help="truncation order for congruence and recursion checks")
    args = parser.parse_args()

    reports = []
    small = min(args.order, 25)

    for t in (2, 3, 4, 5):
        for j in (0, 1, 2):
            reports.append(
                compare_series(
                    "row-weights",
                    row_weight_series(j, t, args.order),
                    row_weight_series_brute(j, t, args.order),
                    t=t,
                    j=j,
                )
            )
    for t in (2, 3, 5):
        reports.append(
            compare_series(
                "defects", defect_series(t, small), defect_series_brute(t, small), t=t
            )
        )
    for j, t in ((0, 2), (0, 3), (0, 5), (1, 2), (1, 3), (2, 2)):
        reports.append(
            compare_series(
                "generalized-cores",
                generalized_core_series(j, t, small),
                generalized_core_series_brute(j, t, small),
                t=t,
                j=j,
            )
        )
    for t in range(2, 8):
        reports.append(check_congruence(t, args.congruence_order, claim="np"))
        reports.append(check_congruence(t, args.congruence_order, claim="multiples"))
        reports.append(check_recursion(t, args.congruence_order))
    for t in (2, 3, 5):
        reports.append(monotonicity_check(t, args.congruence_order))
    for t in (2, 3):
        for j in (0, 1, 2):
            reports.append(telescoped_row_weight_check(t, j, args.order))

    for report in reports:
        print(report.describe())
    failed = [r for r in reports if not r.passed]
    print(f"\n{len(reports) - len(failed)}/{len(reports)} checks passed")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
