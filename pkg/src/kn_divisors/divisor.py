"""Divisors on the complete graph K_n and chip-firing moves.

Vertices are 1-based everywhere in the public interface.  All arithmetic is
checked against the signed 64-bit range; leaving it raises ``OverflowError``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def checked(x: int) -> int:
    """Return ``x`` unchanged, or raise if it does not fit in an int64."""
    if not INT64_MIN <= x <= INT64_MAX:
        raise OverflowError(f"integer {x} outside signed 64-bit range")
    return x


@dataclass(frozen=True)
class Divisor:
    """Chip counts ``coeffs[i-1]`` on vertex v_i of K_n."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        values = tuple(int(c) for c in coeffs)
        if len(values) < 2:
            raise ValueError(f"K_n needs n >= 2, got {len(values)} coefficients")
        for c in values:
            checked(c)
        object.__setattr__(self, "coeffs", values)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, v: int) -> int:
        """Coefficient at vertex ``v`` (1-based)."""
        _check_vertex(self.n, v)
        return self.coeffs[v - 1]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __str__(self) -> str:
        return format_divisor(self)

    @classmethod
    def zero(cls, n: int) -> Divisor:
        _check_n(n)
        return cls([0] * n)

    @classmethod
    def point(cls, n: int, v: int, k: int = 1) -> Divisor:
        """The divisor ``k * v``."""
        _check_n(n)
        _check_vertex(n, v)
        coeffs = [0] * n
        coeffs[v - 1] = k
        return cls(coeffs)

    def __add__(self, other: Divisor) -> Divisor:
        return linear_combination(self, 1, other, 1)

    def __sub__(self, other: Divisor) -> Divisor:
        return linear_combination(self, 1, other, -1)

    def __neg__(self) -> Divisor:
        return Divisor(checked(-c) for c in self.coeffs)


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n}; ``mapping[i-1]`` is the image of i."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(1, len(self.mapping) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.mapping)}: {self.mapping}")

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.mapping, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.mapping == tuple(range(1, self.n + 1))

    def apply(self, D: Divisor) -> Divisor:
        """Move the chips on vertex i to vertex ``self(i)``."""
        if D.n != self.n:
            raise ValueError(f"permutation on {self.n} points applied to divisor on K_{D.n}")
        out = [0] * self.n
        for i, c in enumerate(D.coeffs, start=1):
            out[self(i) - 1] = c
        return Divisor(out)


@dataclass
class ReductionTrace:
    """Firing log: ``steps[k] = (fired set, divisor after firing)``."""

    start: Divisor
    steps: list[tuple[frozenset[int], Divisor]] = field(default_factory=list)

    def record(self, fired: Iterable[int], result: Divisor) -> None:
        self.steps.append((frozenset(fired), result))

    @property
    def final(self) -> Divisor:
        return self.steps[-1][1] if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)

    def extend(self, other: ReductionTrace) -> None:
        if other.start != self.final:
            raise ValueError("trace does not continue from this trace's final divisor")
        self.steps.extend(other.steps)

    def is_consistent(self) -> bool:
        """Each step's divisor is the previous one with the listed set fired."""
        current = self.start
        for fired, result in self.steps:
            if fire_set(current, fired) != result:
                return False
            current = result
        return True


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"K_n needs n >= 2, got {n}")


def _check_vertex(n: int, v: int) -> None:
    if not 1 <= v <= n:
        raise IndexError(f"vertex {v} out of range 1..{n}")


def degree(D: Divisor) -> int:
    return checked(sum(D.coeffs))


def fire_vertex(D: Divisor, v: int) -> Divisor:
    """Fire ``v`` once: it loses n-1 chips, every other vertex gains one."""
    _check_vertex(D.n, v)
    out = [checked(c + 1) for c in D.coeffs]
    out[v - 1] = checked(D.coeffs[v - 1] - (D.n - 1))
    return Divisor(out)


def fire_set(D: Divisor, A: Iterable[int]) -> Divisor:
    """Fire every vertex of ``A`` once.

    With ``|A| = j``, members lose ``n - j`` chips and non-members gain ``j``.
    The empty set and the full vertex set are rejected: both are identity moves.
    """
    members = set(A)
    n = D.n
    if not members:
        raise ValueError("cannot fire the empty set")
    for v in members:
        _check_vertex(n, v)
    j = len(members)
    if j == n:
        raise ValueError("firing every vertex is the identity move")
    return Divisor(
        checked(c - (n - j)) if i in members else checked(c + j)
        for i, c in enumerate(D.coeffs, start=1)
    )


def line_divisor(n: int) -> Divisor:
    """L = v_1 + ... + v_n."""
    _check_n(n)
    return Divisor([1] * n)


def canonical_divisor(n: int) -> Divisor:
    """K = (n-3)L, the canonical divisor of K_n (every vertex has valence n-1)."""
    _check_n(n)
    return Divisor([n - 3] * n)


def genus(n: int) -> int:
    """First Betti number of K_n."""
    _check_n(n)
    return (n - 1) * (n - 2) // 2


def is_effective(D: Divisor) -> bool:
    return all(c >= 0 for c in D.coeffs)


def is_effective_away(D: Divisor, v: int) -> bool:
    _check_vertex(D.n, v)
    return all(c >= 0 for i, c in enumerate(D.coeffs, start=1) if i != v)


def is_vn_reduced(D: Divisor) -> bool:
    """Parking test for v_n-reducedness.

    Checks ``a_j >= 0`` for j < n and ``#{j < n : a_j <= i-1} >= i`` for every
    i <= n-1.  The requirement that some ``a_j`` (j < n) vanishes is the i = 1
    count together with nonnegativity, so it is not checked separately.
    """
    head = D.coeffs[:-1]
    if any(c < 0 for c in head):
        return False
    return all(sum(1 for c in head if c <= i - 1) >= i for i in range(1, D.n))


def is_concentrated(D: Divisor) -> bool:
    low = min(D.coeffs)
    gaps = [c - low for c in D.coeffs]
    return all(sum(1 for g in gaps if g <= i - 1) >= i for i in range(1, D.n + 1))


def is_super_sorted(D: Divisor) -> bool:
    c = D.coeffs
    return all(c[i] <= c[i + 1] for i in range(len(c) - 1))


def super_sort(D: Divisor) -> tuple[Divisor, Permutation]:
    """Stable ascending sort; the permutation sends each vertex to its sorted slot."""
    order = sorted(range(D.n), key=lambda i: D.coeffs[i])
    mapping = [0] * D.n
    for pos, i in enumerate(order, start=1):
        mapping[i] = pos
    return Divisor(D.coeffs[i] for i in order), Permutation(tuple(mapping))


def linear_combination(D1: Divisor, c1: int, D2: Divisor, c2: int) -> Divisor:
    if D1.n != D2.n:
        raise ValueError(f"divisors live on K_{D1.n} and K_{D2.n}")
    return Divisor(
        checked(checked(c1 * x) + checked(c2 * y)) for x, y in zip(D1.coeffs, D2.coeffs)
    )


def parse_divisor(text: str, n: int | None = None) -> Divisor:
    """Parse ``"0,2,0,6,1"``; ``n``, when given, must match the entry count."""
    parts = [p.strip() for p in text.strip().split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"malformed divisor {text!r}")
    try:
        coeffs = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"malformed divisor {text!r}") from None
    if n is not None and len(coeffs) != n:
        raise ValueError(f"expected {n} coefficients, got {len(coeffs)} in {text!r}")
    return Divisor(coeffs)


def format_divisor(D: Divisor | Sequence[int]) -> str:
    return ",".join(str(c) for c in D)
