"""Ranks and splitting types of divisors on K_n.

The rank is computed in closed form from the sorted v_n-reduced
representative (Cori and Le Borgne).  The splitting type of a divisor D is
the tuple (e_1, ..., e_n) with

    rank(D + kL) = sum_i max(0, e_i + k + 1) - 1    for every integer k,

and is read off a super sorted concentrated representative as
``e_i = a_i - i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisor import (
    Divisor,
    canonical_divisor,
    checked,
    degree,
    genus,
    line_divisor,
    linear_combination,
    super_sort,
)
from .reduce import concentrate, reduced_form


@dataclass(frozen=True)
class SplittingType:
    """Multiset of n integers, stored non-increasing."""

    entries: tuple[int, ...]

    def __init__(self, entries):
        values = tuple(sorted((int(e) for e in entries), reverse=True))
        if not values:
            raise ValueError("splitting type needs at least one entry")
        for e in values:
            checked(e)
        object.__setattr__(self, "entries", values)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def shifted(self, m: int) -> SplittingType:
        return SplittingType(checked(e + m) for e in self.entries)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)


@dataclass(frozen=True)
class RankFormulaInputs:
    """``a_n + 1 = q(n-1) + r`` with ``0 <= r <= n-2``, plus chi(i <= r) for i < n."""

    q: int
    r: int
    chi: tuple[int, ...]

    @classmethod
    def from_top(cls, a_n: int, n: int) -> RankFormulaInputs:
        q, r = divmod(checked(a_n + 1), n - 1)  # floor division: 0 <= r <= n-2
        return cls(q, r, tuple(1 if i <= r else 0 for i in range(1, n)))


def sorted_reduced_form(D: Divisor) -> Divisor:
    """v_n-reduced form with a_1..a_{n-1} sorted ascending (v_n stays put)."""
    R = reduced_form(D)
    return Divisor(sorted(R.coeffs[:-1]) + [R.coeffs[-1]])


def rank(D: Divisor) -> int:
    """Baker-Norine rank on K_n via the Cori-Le Borgne formula.

    The formula is applied as-is even when the reduced a_n is negative; it
    then evaluates to -1.
    """
    S = sorted_reduced_form(D)
    n = S.n
    inputs = RankFormulaInputs.from_top(S.coeffs[-1], n)
    total = 0
    for i in range(1, n):
        term = inputs.q - i + 1 + S.coeffs[i - 1] + inputs.chi[i - 1]
        total = checked(total + max(0, term))
    return total - 1


def splitting_type(D: Divisor) -> SplittingType:
    C, _ = super_sort(concentrate(D))
    return SplittingType(checked(a - i + 1) for i, a in enumerate(C.coeffs, start=1))


def rank_from_splitting(S: SplittingType, k: int) -> int:
    """Right-hand side of the splitting-type identity at twist ``k``."""
    total = 0
    for e in S.entries:
        total = checked(total + max(0, checked(e + k + 1)))
    return total - 1


def twist(D: Divisor, k: int) -> Divisor:
    """D + kL."""
    return linear_combination(D, 1, line_divisor(D.n), k)


def riemann_roch_residual(D: Divisor) -> int:
    """rk(D) - rk(K - D) - (deg D - g + 1); zero for every divisor."""
    n = D.n
    K = canonical_divisor(n)
    return rank(D) - rank(K - D) - (degree(D) - genus(n) + 1)


def rank_nonspecial_check(D: Divisor) -> int | None:
    """``deg D - g`` when D - K is equivalent to a nonzero effective divisor, else None."""
    n = D.n
    R = reduced_form(D - canonical_divisor(n))
    if R.coeffs[-1] >= 0 and degree(R) > 0:
        return degree(D) - genus(n)
    return None
