#!/usr/bin/env python3
"""Tabulate how fast average defects approach n/(t-1).

Prints a CSV table of exact total defects against both predictions for a
ladder of sizes; the ratio column should creep toward 1 as n grows.

Usage:
  python scripts/defect_trend.py [--t 2,3,5] [--samples 100,200,400] [--dps 50]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from coretower import defect_samples, samples_to_csv  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--t", default="2,3,5", help="comma-separated moduli")
    parser.add_argument("--samples", default="100,200,400",
                        help="comma-separated sizes")
    parser.add_argument("--dps", type=int, default=50,
                        help="working decimal digits")
    args = parser.parse_args()

    moduli = [int(x) for x in args.t.split(",")]
    sizes = [int(x) for x in args.samples.split(",")]
    for t in moduli:
        print(f"# t={t}")
        sys.stdout.write(samples_to_csv(defect_samples(t, sizes, dps=args.dps)))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
