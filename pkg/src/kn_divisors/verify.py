"""Verification suites that check the K_n closed forms against brute force.

Each suite returns a :class:`SuiteResult`; the first failing case is kept as
a counterexample.  All randomness flows from ``VerifyConfig.seed``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations, product

from . import oracle
from .divisor import Divisor, degree, is_concentrated
from .enumeration import enumerate_splitting_types, is_feasible_splitting, witness_divisor
from .rank import (
    rank,
    rank_from_splitting,
    rank_nonspecial_check,
    riemann_roch_residual,
    splitting_type,
    twist,
)
from .reduce import concentrate, equivalent, reduced_form

TWISTS = range(-6, 7)


@dataclass
class VerifyConfig:
    n_values: tuple[int, ...] = (4,)
    box: tuple[int, int] | None = None
    seed: int = 0
    samples: int = 300
    exhaustive: bool = False


@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{self.name}: {status} ({self.detail or f'{self.cases} cases'})"
        if self.counterexample is not None:
            text += f" counterexample: {self.counterexample}"
        return text

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "detail": self.detail,
            "counterexample": self.counterexample,
        }


@dataclass
class _Tally:
    name: str
    cases: int = 0
    failure: str | None = None

    def check(self, ok: bool, witness) -> bool:
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = str(witness)
        return ok

    def result(self, detail: str = "") -> SuiteResult:
        return SuiteResult(self.name, self.failure is None, self.cases, detail, self.failure)


def parking_prefixes(length: int):
    """Non-decreasing (a_1..a_length) with 0 <= a_i <= i-1."""

    def extend(prefix):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        i = len(prefix) + 1
        low = prefix[-1] if prefix else 0
        for a in range(low, i):
            yield from extend(prefix + [a])

    yield from extend([])


def concentrated_family(n: int):
    """All (a_1..a_n) with 0 <= a_i <= i-1; every one is concentrated with a_1 = 0."""
    return product(*(range(i) for i in range(1, n + 1)))


def random_divisor(rng: random.Random, n: int, lo: int, hi: int) -> Divisor:
    return Divisor(rng.randint(lo, hi) for _ in range(n))


def random_lattice_translate(rng: random.Random, n: int, spread: int = 3) -> Divisor:
    """Random integer combination of Laplacian columns of K_n."""
    counts = [rng.randint(-spread, spread) for _ in range(n)]
    total = sum(counts)
    # column v is (n-1 fewer at v, one more elsewhere), i.e. e_v*(-n) + L
    return Divisor(total - n * c for c in counts)


def rank_oracle_exhaustive_cases(n: int, box: tuple[int, int] = (-4, 14)):
    """Every labelled divisor whose sorted reduced shape is a parking prefix
    followed by a_n in ``box``."""
    lo, hi = box
    top_degree = sum(range(n - 1)) + hi
    if n > oracle.MAX_ORACLE_VERTICES or top_degree > oracle.MAX_ORACLE_DEGREE:
        raise oracle.OracleGuardError(
            f"exhaustive rank check on K_{n} reaches degree {top_degree}; "
            f"the oracle allows {oracle.MAX_ORACLE_DEGREE} on at most "
            f"{oracle.MAX_ORACLE_VERTICES} vertices"
        )
    return _exhaustive_cases(n, lo, hi)


def _exhaustive_cases(n, lo, hi):
    for prefix in parking_prefixes(n - 1):
        for top in range(lo, hi + 1):
            for perm in sorted(set(permutations(prefix + (top,)))):
                yield Divisor(perm)


def suite_rank_oracle(cfg: VerifyConfig) -> SuiteResult:
    tally = _Tally("rank-oracle")
    rng = random.Random(cfg.seed)
    for n in cfg.n_values:
        G = oracle.complete_graph(n)
        if cfg.exhaustive:
            cases = rank_oracle_exhaustive_cases(n, cfg.box or (-4, 14))
        else:
            lo, hi = cfg.box or (-3, 7)
            cases = []
            while len(cases) < cfg.samples:
                D = random_divisor(rng, n, lo, hi)
                if degree(D) <= oracle.MAX_ORACLE_DEGREE:
                    cases.append(D)
        for D in cases:
            tally.check(rank(D) == oracle.rank_oracle(G, D.coeffs), D)
    return tally.result(f"{tally.cases} cases")


def suite_splitting_identity(cfg: VerifyConfig) -> SuiteResult:
    """rank(D + kL) against the splitting-type formula on the a_1 = 0 family.

    For this family every e_i lies in [1-n, 0], so the right-hand side only
    bends at k in [-1, n-2].  Outside that window both sides are linear in k
    (rank -1 below, Riemann-Roch nonspecial above), so |k| <= 6 is enough for
    n <= 7.
    """
    tally = _Tally("splitting-identity")
    divisors = 0
    for n in cfg.n_values:
        for coeffs in concentrated_family(n):
            D = Divisor(coeffs)
            divisors += 1
            S = splitting_type(D)
            for k in TWISTS:
                tally.check(rank(twist(D, k)) == rank_from_splitting(S, k), f"{D} k={k}")
    return tally.result(f"{divisors} divisors × {len(TWISTS)} twists")


def suite_riemann_roch(cfg: VerifyConfig) -> SuiteResult:
    tally = _Tally("riemann-roch")
    rng = random.Random(cfg.seed)
    lo, hi = cfg.box or (-5, 10)
    fired = 0
    for t in range(cfg.samples):
        n = cfg.n_values[t % len(cfg.n_values)]
        D = random_divisor(rng, n, lo, hi)
        ok = riemann_roch_residual(D) == 0
        value = rank_nonspecial_check(D)
        if value is not None:
            fired += 1
            ok = ok and value == rank(D)
        tally.check(ok, D)
    return tally.result(f"{tally.cases} divisors, nonspecial shortcut fired {fired} times")


def suite_splitting_round_trip(cfg: VerifyConfig) -> SuiteResult:
    """Feasibility of computed types and witness round trips."""
    tally = _Tally("splitting-round-trip")
    rng = random.Random(cfg.seed)
    lo, hi = cfg.box or (-5, 10)
    for n in cfg.n_values:
        for d in range(0, 13):
            for S in enumerate_splitting_types(n, d):
                W = witness_divisor(S)
                tally.check(
                    splitting_type(W) == S and degree(W) == d and is_concentrated(W), S
                )
        for _ in range(cfg.samples):
            D = random_divisor(rng, n, lo, hi)
            tally.check(is_feasible_splitting(splitting_type(D)), D)
    return tally.result()


def suite_reduce_uniqueness(cfg: VerifyConfig) -> SuiteResult:
    tally = _Tally("reduce-uniqueness")
    rng = random.Random(cfg.seed)
    lo, hi = cfg.box or (-4, 8)
    for n in cfg.n_values:
        G = oracle.complete_graph(n)
        for _ in range(cfg.samples):
            D = random_divisor(rng, n, lo, hi)
            P = random_lattice_translate(rng, n)
            R = reduced_form(D)
            ok = (
                reduced_form(D + P) == R
                and oracle.general_dhar_reduce(G, D.coeffs, n) == R.coeffs
                and equivalent(concentrate(D), D)
            )
            tally.check(ok, f"{D} + {P}")
    return tally.result()


SUITES = {
    "rank-oracle": suite_rank_oracle,
    "splitting-identity": suite_splitting_identity,
    "riemann-roch": suite_riemann_roch,
    "splitting-round-trip": suite_splitting_round_trip,
    "reduce-uniqueness": suite_reduce_uniqueness,
}


def run_suite(name: str, cfg: VerifyConfig) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return suite(cfg)
