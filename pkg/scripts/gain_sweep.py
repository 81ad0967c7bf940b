#!/usr/bin/env python3
"""Sweep the sum-rate gain of merged encoding over separate encoding.

Prints the B=9, N=3 reference table and optionally writes it as CSV.

Usage: python scripts/gain_sweep.py [--b B] [--n N] [--csv out.csv]
"""

import argparse
import sys

sys.path.insert(0, "src")

from muxfec.analysis import gain_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--b", type=int, default=9)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--tv-lo", type=int, default=20)
    ap.add_argument("--tv-hi", type=int, default=25)
    ap.add_argument("--tu-lo", type=int, default=10)
    ap.add_argument("--tu-hi", type=int, default=15)
    ap.add_argument("--csv", default=None)
    args = ap.parse_args()

    table = gain_table(
        args.b, args.n, range(args.tv_lo, args.tv_hi + 1), range(args.tu_lo, args.tu_hi + 1)
    )
    header = ["T_v/T_u"] + [str(t) for t in table.tu_values]
    print("  ".join(f"{h:>8}" for h in header))
    for tv in table.tv_values:
        row = [str(tv)] + [table.cell(tv, tu).printed() or "--" for tu in table.tu_values]
        print("  ".join(f"{c:>8}" for c in row))

    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(table.to_csv())
        print(f"\nwrote {args.csv}")


if __name__ == "__main__":
    main()
