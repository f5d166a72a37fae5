#!/usr/bin/env python3
"""Run every verification suite at the sizes used by the acceptance tests.

Usage:
    python scripts/run_verification.py [--seed 0]
"""

import argparse
import sys
import time
from dataclasses import replace

from kn_divisors.verify import VerifyConfig, run_suite

PLAN = [
    ("rank-oracle", VerifyConfig(n_values=(4,), exhaustive=True)),
    ("rank-oracle", VerifyConfig(n_values=(5, 6), samples=300)),
    ("splitting-identity", VerifyConfig(n_values=(5,))),
    ("riemann-roch", VerifyConfig(n_values=(3, 4, 5, 6, 7), samples=500)),
    ("splitting-round-trip", VerifyConfig(n_values=(3, 4, 5), samples=1000)),
    ("reduce-uniqueness", VerifyConfig(n_values=(3, 4, 5), samples=200)),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    ok = True
    for name, cfg in PLAN:
        cfg = replace(cfg, seed=args.seed)
        t0 = time.perf_counter()
        result = run_suite(name, cfg)
        ok &= result.passed
        print(f"{result.line()}  n={list(cfg.n_values)}  [{time.perf_counter() - t0:.2f}s]")
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
