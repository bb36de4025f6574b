#!/usr/bin/env python3
"""Measure how far the constructive certificate searches reach without brute force.

For each modulus in range with gcd(n, 6) = 1 and at most two distinct prime
factors, runs the full pipeline over every sequence and prints a table of
derivation counts plus any pipeline gaps (unit-leading sequences that fell
through to the brute-force scan).

Usage:
    python3 scripts/pipeline_coverage.py --from 5 --to 200
    python3 scripts/pipeline_coverage.py --from 25 --to 343 --mode orbits
"""

from __future__ import annotations

import argparse
import sys
import time

from zsindex.harness import in_constructive_domain, verify_modulus

DERIVATION_COLUMNS = ["forced", "small_a", "interval", "half_interval", "majority_small", "lifted", "brute_force"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="from_n", type=int, default=5)
    parser.add_argument("--to", dest="to_n", type=int, default=200)
    parser.add_argument("--mode", choices=("full", "orbits"), default="full")
    args = parser.parse_args()

    header = f"{'n':>5} {'seqs':>9} " + " ".join(f"{c:>14}" for c in DERIVATION_COLUMNS) + f" {'gaps':>5}"
    print(header)
    total_gaps = 0
    t0 = time.perf_counter()
    for n in range(args.from_n, args.to_n + 1):
        if not in_constructive_domain(n):
            continue
        report = verify_modulus(n, args.mode)
        hist = report.derivation_histogram
        row = f"{n:>5} {report.sequences_checked:>9} "
        row += " ".join(f"{hist.get(c, 0):>14}" for c in DERIVATION_COLUMNS)
        row += f" {report.pipeline_gaps:>5}"
        print(row)
        total_gaps += report.pipeline_gaps
        if report.counterexamples:
            print(f"    COUNTEREXAMPLES: {[(s.coeffs, str(r.value)) for s, r in report.counterexamples]}")
    print(f"# total pipeline gaps: {total_gaps}  ({time.perf_counter() - t0:.1f}s)")
    return 1 if total_gaps else 0


if __name__ == "__main__":
    sys.exit(main())
