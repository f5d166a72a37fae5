#!/usr/bin/env python3
"""Tabulate, for each degree d on K_n, every feasible splitting type and the
rank of its witness divisor.

Usage:
    python scripts/rank_table.py --n 5 --degrees 0..12
"""

import argparse
from collections import defaultdict

from kn_divisors import enumerate_splitting_types, rank, witness_divisor


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--degrees", default="0..12")
    args = parser.parse_args()
    lo, hi = (int(x) for x in args.degrees.split(".."))

    for d in range(lo, hi + 1):
        by_rank = defaultdict(list)
        for S in enumerate_splitting_types(args.n, d):
            by_rank[rank(witness_divisor(S))].append(str(S))
        ranks = sorted(by_rank)
        print(f"d={d:3d}  ranks {ranks}")
        for r in ranks:
            print(f"        r={r:2d}: " + "  ".join(f"({s})" for s in by_rank[r]))


if __name__ == "__main__":
    main()
