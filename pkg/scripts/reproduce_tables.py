"""Recompute the chamber-count tables and compare with the published rows.

    python scripts/reproduce_tables.py --max-n 6 --engine both
"""

import argparse
import time

from goldilocks.chambers import REFERENCE_POSITIVE, REFERENCE_ZERO, count_chambers
from goldilocks.enumeration import Engine, Genus

START = {Genus.POSITIVE: 1, Genus.ZERO: 3}
REFERENCE = {Genus.POSITIVE: REFERENCE_POSITIVE, Genus.ZERO: REFERENCE_ZERO}


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--engine", choices=[e.value for e in Engine], default="both")
    p.add_argument("--workers", type=int, default=1)
    args = p.parse_args()

    ok = True
    for genus in Genus:
        print(f"\ngenus {genus.value}")
        print("| n | count | count/S_n | seconds | matches |")
        print("|---|---|---|---|---|")
        for n in range(START[genus], args.max_n + 1):
            t0 = time.perf_counter()
            row = count_chambers(n, genus, Engine(args.engine), args.workers)
            dt = time.perf_counter() - t0
            match = (row.count, row.orbit_count) == REFERENCE[genus][n]
            ok &= match
            print(f"| {n} | {row.count} | {row.orbit_count} | {dt:.2f} | {'yes' if match else 'NO'} |")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
