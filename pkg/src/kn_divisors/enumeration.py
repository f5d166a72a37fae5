"""Which splitting types occur on K_n, with explicit witness divisors.

A tuple is realised by some divisor exactly when, in non-increasing order,
consecutive entries drop by at most one.
"""

from __future__ import annotations

from itertools import product

from .divisor import Divisor, checked
from .rank import SplittingType

MAX_ENUMERATION_N = 16


class InfeasibleSplittingType(ValueError):
    pass


def is_feasible_splitting(S: SplittingType) -> bool:
    e = S.entries
    return all(e[i] <= e[i + 1] + 1 for i in range(len(e) - 1))


def witness_divisor(S: SplittingType) -> Divisor:
    """Super sorted concentrated divisor with ``a_i = e_i + i - 1`` (e non-increasing)."""
    if not is_feasible_splitting(S):
        raise InfeasibleSplittingType(f"({S}) has a drop larger than 1")
    return Divisor(checked(e + i) for i, e in enumerate(S.entries))


def enumerate_splitting_types(n: int, d: int) -> list[SplittingType]:
    """All feasible splitting types of degree-``d`` divisors on K_n.

    Entries sum to ``d - n(n-1)/2``.  A feasible tuple is fixed by its drop
    pattern (each consecutive drop is 0 or 1) together with its sum, so we
    walk the 2^(n-1) drop patterns and solve for the leading entry.  Output is
    sorted lexicographically.
    """
    if n < 2:
        raise ValueError(f"K_n needs n >= 2, got {n}")
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration limited to n <= {MAX_ENUMERATION_N}, got {n}")
    target = d - n * (n - 1) // 2
    found = []
    for drops in product((0, 1), repeat=n - 1):
        offsets = [0]
        for step in drops:
            offsets.append(offsets[-1] - step)
        lead, rem = divmod(target - sum(offsets), n)
        if rem == 0:
            found.append(tuple(lead + o for o in offsets))
    return [SplittingType(t) for t in sorted(found)]
