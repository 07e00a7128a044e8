"""Wall-clock cost of the cold brute-force sweeps behind every oracle.

    python scripts/time_sweeps.py [--sn-max 10] [--bn-max 7]
"""

import argparse
import time

from signed_mahonian import genfun as gf


def timed(fn, n):
    t0 = time.perf_counter()
    tally = fn(n)
    return time.perf_counter() - t0, sum(tally.values())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sn-max", type=int, default=10)
    ap.add_argument("--bn-max", type=int, default=7)
    args = ap.parse_args()
    print(f"{'group':<6}{'n':>3}{'|G|':>12}{'seconds':>10}")
    for label, fn, top in (("S_n", gf.sn_tally, args.sn_max), ("B_n", gf.bn_tally, args.bn_max)):
        for n in range(1, top + 1):
            dt, size = timed(fn, n)
            print(f"{label:<6}{n:>3}{size:>12}{dt:>10.3f}")


if __name__ == "__main__":
    main()
