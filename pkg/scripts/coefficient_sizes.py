#!/usr/bin/env python3
"""Compare coefficient growth: invariant polynomials versus Hilbert.

Both polynomials generate the same class field, but the invariant t_n
is a unit whose conjugates all sit near the unit circle, so its minimal
polynomial stays tiny while the Hilbert coefficients explode.  This
script prints the decimal size of the largest coefficient of each, per
discriminant, with the compression ratio.

Usage:
    python scripts/coefficient_sizes.py [--to N]
"""

import argparse
import sys
import time

from classinv.classpoly import compute_hilbert, compute_ramanujan


def digit_count(polynomial):
    return max(len(str(abs(c))) for c in polynomial.coefficients)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--to", type=int, default=347,
                        help="largest n to include (Hilbert cost grows fast)")
    args = parser.parse_args(argv)

    targets = [n for n in range(11, args.to + 1) if n % 24 == 11]
    print(f"{'n':>5}  {'h':>3}  {'invariant':>9}  {'hilbert':>8}  ratio")
    start = time.perf_counter()
    for n in targets:
        small = compute_ramanujan(n)
        big = compute_hilbert(-n)
        a = digit_count(small.polynomial)
        b = digit_count(big.polynomial)
        print(f"{n:>5}  {small.class_number:>3}  {a:>9}  {b:>8}  {b / a:>5.1f}")
    print(f"\ndone in {time.perf_counter() - start:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
