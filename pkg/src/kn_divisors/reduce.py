"""Canonical representatives on K_n: v_n-reduced forms and concentrated forms."""

from __future__ import annotations

from .divisor import (
    Divisor,
    Permutation,
    ReductionTrace,
    _check_vertex,
    checked,
    fire_set,
    fire_vertex,
    is_concentrated,
    is_effective_away,
)


class ReductionError(RuntimeError):
    pass


def make_effective_away(D: Divisor) -> tuple[Divisor, ReductionTrace]:
    """Fire v_n until every other vertex is out of debt.

    Each firing of v_n hands one chip to each other vertex, so exactly
    ``max(0, -min_{j<n} a_j)`` firings are needed.
    """
    n = D.n
    trace = ReductionTrace(D)
    t = max(0, -min(D.coeffs[:-1]))
    current = D
    for _ in range(t):
        current = fire_vertex(current, n)
        trace.record({n}, current)
    return current, trace


def _dhar_threshold(head: tuple[int, ...]) -> int | None:
    # largest i <= n-1 with #{j < n : a_j <= i-1} <= i-1
    for i in range(len(head), 0, -1):
        if sum(1 for a in head if a <= i - 1) <= i - 1:
            return i
    return None


def dhar_reduce(D: Divisor) -> tuple[Divisor, ReductionTrace]:
    """Burning algorithm for v_n on K_n.

    Repeatedly picks the largest ``i`` with at most ``i-1`` of a_1..a_{n-1}
    below ``i`` and fires ``{v_j : j < n, a_j >= i}``, until the divisor is
    v_n-reduced.
    """
    n = D.n
    if not is_effective_away(D, n):
        raise ReductionError(f"{D} is not effective away from v_{n}")
    trace = ReductionTrace(D)
    current = D
    off_sink = sum(D.coeffs[:-1])
    while True:
        head = current.coeffs[:-1]
        i = _dhar_threshold(head)
        if i is None:
            return current, trace
        A = {j for j, a in enumerate(head, start=1) if a >= i}
        current = fire_set(current, A)
        trace.record(A, current)
        remaining = sum(current.coeffs[:-1])
        assert remaining < off_sink, "chips off v_n must strictly decrease"
        assert is_effective_away(current, n)
        off_sink = remaining


def reduce_with_trace(D: Divisor) -> tuple[Divisor, ReductionTrace]:
    """Effective-away preprocessing followed by burning, as one trace."""
    E, trace = make_effective_away(D)
    R, burn = dhar_reduce(E)
    trace.extend(burn)
    return R, trace


def reduced_form(D: Divisor) -> Divisor:
    """The unique v_n-reduced divisor equivalent to ``D``."""
    return reduce_with_trace(D)[0]


def _swap(n: int, q: int) -> Permutation:
    mapping = list(range(1, n + 1))
    mapping[q - 1], mapping[n - 1] = n, q
    return Permutation(tuple(mapping))


def reduce_at(D: Divisor, q: int) -> Divisor:
    """The unique q-reduced divisor equivalent to ``D``.

    K_n is vertex-transitive, so relabel q as v_n, reduce, and relabel back.
    """
    _check_vertex(D.n, q)
    swap = _swap(D.n, q)
    return swap.apply(reduced_form(swap.apply(D)))


def equivalent(D1: Divisor, D2: Divisor) -> bool:
    if D1.n != D2.n:
        raise ValueError(f"divisors live on K_{D1.n} and K_{D2.n}")
    return reduced_form(D1) == reduced_form(D2)


def concentrate(D: Divisor) -> Divisor:
    """A concentrated divisor equivalent to ``D``.

    Takes the v_n-reduced form R and ``m = floor(R_n / n)``, then returns
    ``R - m*n*v_n + m*L``.  The result depends on the algorithm: concentrated
    representatives of a class are not unique in general.
    """
    R = reduced_form(D)
    n = R.n
    m = R.coeffs[-1] // n
    out = [checked(a + m) for a in R.coeffs[:-1]]
    out.append(checked(R.coeffs[-1] - checked(m * (n - 1))))
    C = Divisor(out)
    if not is_concentrated(C):
        raise ReductionError(f"concentration of {D} produced non-concentrated {C}")
    return C
