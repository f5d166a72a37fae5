"""Naive reference computations used only by the tests.

Reduced forms are found by scanning Laplacian translates for the one that
passes the subset-firing certificate; rank enumerates every effective E with
itertools and no memoisation.
"""

from itertools import combinations_with_replacement, product

from kn_divisors import oracle


def brute_reduced(G, D, q, spread=4):
    hits = set()
    cols = [G.laplacian_column(v) for v in range(1, G.m + 1)]
    for counts in product(range(-spread, spread + 1), repeat=G.m - 1):
        E = list(D)
        for k, col in zip(counts, cols):
            E = [e + k * x for e, x in zip(E, col)]
        if oracle.is_q_reduced(G, E, q):
            hits.add(tuple(E))
    assert len(hits) <= 1, hits
    return hits.pop() if hits else None


def naive_rank(G, D):
    if not oracle.equivalent_to_effective(G, D):
        return -1
    r = 0
    while True:
        for E in combinations_with_replacement(range(G.m), r + 1):
            diff = list(D)
            for v in E:
                diff[v] -= 1
            if not oracle.equivalent_to_effective(G, diff):
                return r
        r += 1
