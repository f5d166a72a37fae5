"""Brute-force divisor theory on arbitrary connected loopless multigraphs.

Nothing here knows about the closed forms for K_n.  Reduction is the generic
burning algorithm and rank is the Baker-Norine definition searched over all
effective divisors E, so these functions serve as ground truth for the K_n
formulas on small instances.

Vertices are 1-based; divisors are plain integer sequences of length m.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

GenericDivisor = tuple[int, ...]

MAX_ORACLE_VERTICES = 7
MAX_ORACLE_DEGREE = 20


class OracleGuardError(ValueError):
    """Raised when an input is too large for exhaustive search."""


@dataclass(frozen=True)
class GenericGraph:
    m: int
    mult: tuple[tuple[int, ...], ...]

    def __init__(self, mult: Sequence[Sequence[int]]):
        table = tuple(tuple(int(x) for x in row) for row in mult)
        m = len(table)
        if m < 1 or any(len(row) != m for row in table):
            raise ValueError("multiplicity table must be square and nonempty")
        for u in range(m):
            if table[u][u] != 0:
                raise ValueError(f"loop at vertex {u + 1}")
            for v in range(m):
                if table[u][v] < 0 or table[u][v] != table[v][u]:
                    raise ValueError(f"bad multiplicity between {u + 1} and {v + 1}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "mult", table)

    @property
    def num_edges(self) -> int:
        return sum(sum(row) for row in self.mult) // 2

    @property
    def genus(self) -> int:
        return self.num_edges - self.m + 1

    def valence(self, v: int) -> int:
        return sum(self.mult[v - 1])

    def canonical_divisor(self) -> GenericDivisor:
        return tuple(self.valence(v) - 2 for v in range(1, self.m + 1))

    def is_connected(self) -> bool:
        return len(_distances(self, 0)) == self.m

    def laplacian_column(self, v: int) -> GenericDivisor:
        """Change in chips when ``v`` fires once."""
        col = list(self.mult[v - 1])
        col[v - 1] = -self.valence(v)
        return tuple(col)


def complete_graph(n: int) -> GenericGraph:
    if n < 2:
        raise ValueError(f"K_n needs n >= 2, got {n}")
    return GenericGraph([[0 if i == j else 1 for j in range(n)] for i in range(n)])


def path_graph(m: int) -> GenericGraph:
    table = [[0] * m for _ in range(m)]
    for i in range(m - 1):
        table[i][i + 1] = table[i + 1][i] = 1
    return GenericGraph(table)


def graph_from_edges(m: int, edges: Sequence[tuple[int, int]]) -> GenericGraph:
    """Multigraph on vertices 1..m; repeated edges add multiplicity."""
    table = [[0] * m for _ in range(m)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        table[u - 1][v - 1] += 1
        table[v - 1][u - 1] += 1
    return GenericGraph(table)


def _distances(G: GenericGraph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in range(G.m):
            if G.mult[u][v] and v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _check_divisor(G: GenericGraph, D: Sequence[int]) -> list[int]:
    if len(D) != G.m:
        raise ValueError(f"divisor of length {len(D)} on a graph with {G.m} vertices")
    return [int(c) for c in D]


def fire_set(G: GenericGraph, D: Sequence[int], A) -> GenericDivisor:
    """Fire every vertex of ``A`` (1-based) once."""
    out = _check_divisor(G, D)
    members = {a - 1 for a in A}
    for u in members:
        for v in range(G.m):
            if v not in members and G.mult[u][v]:
                out[u] -= G.mult[u][v]
                out[v] += G.mult[u][v]
    return tuple(out)


def _make_effective_away(G: GenericGraph, D: list[int], q: int) -> list[int]:
    # Fire the balls B_k around q from the outside in; firing B_k only moves
    # chips between the layers k and k+1, so fixed outer layers stay fixed.
    dist = _distances(G, q)
    depth = max(dist.values())
    for k in range(depth - 1, -1, -1):
        ball = [u for u, d in dist.items() if d <= k]
        shell = [v for v, d in dist.items() if d == k + 1]
        t = 0
        for v in shell:
            inflow = sum(G.mult[v][u] for u in ball)
            if D[v] < 0:
                t = max(t, -(D[v] // inflow))  # ceil(-D[v] / inflow)
        if t:
            inside = set(ball)
            for u in ball:
                for v in range(G.m):
                    if v not in inside and G.mult[u][v]:
                        D[u] -= t * G.mult[u][v]
                        D[v] += t * G.mult[u][v]
    return D


def _burn(G: GenericGraph, D: list[int], q: int) -> list[int]:
    while True:
        burnt = {q}
        edges_to_fire = [G.mult[v][q] for v in range(G.m)]
        changed = True
        while changed:
            changed = False
            for v in range(G.m):
                if v not in burnt and D[v] < edges_to_fire[v]:
                    burnt.add(v)
                    for w in range(G.m):
                        edges_to_fire[w] += G.mult[w][v]
                    changed = True
        if len(burnt) == G.m:
            return D
        for u in range(G.m):
            if u not in burnt:
                # u sends one chip along every edge into the burnt set
                for v in burnt:
                    if G.mult[u][v]:
                        D[u] -= G.mult[u][v]
                        D[v] += G.mult[u][v]


def general_dhar_reduce(G: GenericGraph, D: Sequence[int], q: int) -> GenericDivisor:
    """The unique q-reduced divisor equivalent to ``D`` on a connected graph."""
    if not 1 <= q <= G.m:
        raise IndexError(f"vertex {q} out of range 1..{G.m}")
    if not G.is_connected():
        raise ValueError("reduced divisors need a connected graph")
    work = _make_effective_away(G, _check_divisor(G, D), q - 1)
    return tuple(_burn(G, work, q - 1))


def is_q_reduced(G: GenericGraph, D: Sequence[int], q: int) -> bool:
    """Certificate by exhaustion: effective away from q, and no nonempty set
    avoiding q can fire while keeping that property."""
    D = _check_divisor(G, D)
    others = [v for v in range(1, G.m + 1) if v != q]
    if any(D[v - 1] < 0 for v in others):
        return False
    for size in range(1, len(others) + 1):
        for A in combinations(others, size):
            fired = fire_set(G, D, A)
            if all(fired[v - 1] >= 0 for v in others):
                return False
    return True


def generic_equivalent(G: GenericGraph, D1: Sequence[int], D2: Sequence[int]) -> bool:
    if len(D1) != len(D2):
        raise ValueError("divisors of different lengths")
    return general_dhar_reduce(G, D1, 1) == general_dhar_reduce(G, D2, 1)


def equivalent_to_effective(G: GenericGraph, D: Sequence[int], q: int = 1) -> bool:
    return general_dhar_reduce(G, D, q)[q - 1] >= 0


def rank_oracle(G: GenericGraph, D: Sequence[int]) -> int:
    """Baker-Norine rank by definition.

    Returns -1 if D is not equivalent to an effective divisor; otherwise the
    largest r such that D - E is equivalent to an effective divisor for every
    effective E of degree r.  E ranges over all multisets of vertices.  The
    search over E is memoised on the reduced class of the partial difference,
    which does not change which E are examined, only how often the same class
    is re-reduced.
    """
    D = _check_divisor(G, D)
    if G.m > MAX_ORACLE_VERTICES:
        raise OracleGuardError(f"rank oracle limited to {MAX_ORACLE_VERTICES} vertices, got {G.m}")
    if sum(D) > MAX_ORACLE_DEGREE:
        raise OracleGuardError(f"rank oracle limited to degree {MAX_ORACLE_DEGREE}, got {sum(D)}")
    if not G.is_connected():
        raise ValueError("rank oracle needs a connected graph")

    q = 0

    @lru_cache(maxsize=None)
    def reduce_minus(R: GenericDivisor, v: int) -> GenericDivisor:
        work = list(R)
        work[v] -= 1
        return tuple(_burn(G, _make_effective_away(G, work, q), q))

    @lru_cache(maxsize=None)
    def survives(R: GenericDivisor, size: int, start: int) -> bool:
        # Every multiset E of `size` vertices drawn from start.. keeps R - E effective.
        if R[q] < 0:
            return False
        if size == 0:
            return True
        return all(survives(reduce_minus(R, v), size - 1, v) for v in range(start, G.m))

    R0 = tuple(_burn(G, _make_effective_away(G, list(D), q), q))
    if R0[q] < 0:
        return -1
    r = 0
    while r < sum(D) and survives(R0, r + 1, 0):
        r += 1
    return r
