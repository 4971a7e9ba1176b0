#!/usr/bin/env python3
"""Sweep the Cech cross-check over a grid of dimensions, primes and degrees,
printing per-configuration totals and timing.

Example:
    python scripts/cech_sweep.py --max-degree 4 --i 2
"""

import argparse
import json
import time

from perfproj import verify_theorems


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dims", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--i", type=int, default=2, help="max denominator exponent")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    degrees = list(range(-args.max_degree, args.max_degree + 1))
    grand_total = 0
    all_ok = True
    for n in args.dims:
        for p in args.primes:
            start = time.perf_counter()
            report = verify_theorems(n, degrees, args.i, p)
            elapsed = time.perf_counter() - start
            weights = sum(s.weights_checked for s in report.per_degree)
            grand_total += weights
            all_ok = all_ok and report.ok
            if args.json:
                print(json.dumps(report.to_json_dict()))
            else:
                status = "ok" if report.ok else "MISMATCH"
                print(f"n={n} p={p} i={args.i}: {weights} weights, "
                      f"{len(report.counterexamples)} counterexamples, "
                      f"{elapsed:.2f}s [{status}]")
    print(f"total weights checked: {grand_total}; "
          f"{'all consistent' if all_ok else 'MISMATCHES FOUND'}")


if __name__ == "__main__":
    main()
