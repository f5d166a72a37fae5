import random
from itertools import product

import pytest
from hypothesis import given, settings

from brute import brute_reduced
from conftest import divisors
from kn_divisors import (
    Divisor,
    concentrate,
    degree,
    dhar_reduce,
    equivalent,
    is_concentrated,
    is_effective_away,
    is_vn_reduced,
    line_divisor,
    make_effective_away,
    oracle,
    reduce_at,
    reduced_form,
)
from kn_divisors.reduce import ReductionError, reduce_with_trace
from kn_divisors.verify import random_lattice_translate


def test_make_effective_away():
    E, trace = make_effective_away(Divisor([-2, 0, 1, 5]))
    assert E == Divisor([0, 2, 3, -1])
    assert [set(f) for f, _ in trace.steps] == [{4}, {4}]
    assert trace.is_consistent()
    D = Divisor([0, 2, 0, 6, 1])
    E, trace = make_effective_away(D)
    assert E == D and len(trace) == 0
    assert make_effective_away(Divisor([-1, -1, 2]))[0] == Divisor([0, 0, 0])


def test_dhar_figure_one():
    R, trace = dhar_reduce(Divisor([0, 2, 0, 6, 1]))
    assert R == Divisor([0, 2, 0, 1, 6])
    assert [(set(f), d) for f, d in trace.steps] == [
        ({4}, Divisor([1, 3, 1, 2, 2])),
        ({1, 2, 3, 4}, Divisor([0, 2, 0, 1, 6])),
    ]
    R, trace = dhar_reduce(Divisor([1, 3, 1, 2, 2]))
    assert R == Divisor([0, 2, 0, 1, 6]) and len(trace) == 1


def test_dhar_leaves_reduced_alone():
    R, trace = dhar_reduce(Divisor([0, 2, 0, 1, 6]))
    assert R == Divisor([0, 2, 0, 1, 6]) and len(trace) == 0


def test_dhar_precondition():
    with pytest.raises(ReductionError):
        dhar_reduce(Divisor([-1, 0, 3]))


def test_reduced_form_examples():
    assert reduced_form(Divisor([0, 2, 0, 6, 1])) == Divisor([0, 2, 0, 1, 6])
    assert reduced_form(line_divisor(5)) == Divisor([0, 0, 0, 0, 5])
    assert reduced_form(Divisor([0] * 4)) == Divisor([0] * 4)


def test_reduce_at_examples():
    L = line_divisor(5)
    assert reduce_at(L, 5) == reduced_form(L)
    # values below were found by brute-force lattice search in brute.py
    assert reduce_at(L, 1) == Divisor([5, 0, 0, 0, 0])
    assert reduce_at(Divisor([2, 0, 1]), 2) == Divisor([1, 2, 0])
    with pytest.raises(IndexError):
        reduce_at(L, 6)


@pytest.mark.parametrize(
    "coeffs, q",
    [((1, 1, 1, 1, 1), 5), ((1, 1, 1, 1, 1), 1), ((2, 0, 1), 2), ((0, 2, 0, 6, 1), 5),
     ((-3, 4, 1, 0), 2), ((5, -2, 0, 1), 3)],
)
def test_reduce_at_against_brute_force(coeffs, q):
    G = oracle.complete_graph(len(coeffs))
    assert reduce_at(Divisor(coeffs), q).coeffs == brute_reduced(G, coeffs, q)


def test_equivalent_examples():
    for n in range(2, 8):
        top = Divisor.point(n, n, n - 1)
        rest = Divisor([1] * (n - 1) + [0])
        assert equivalent(top, rest)
        assert is_concentrated(top) and is_concentrated(rest)
    assert equivalent(line_divisor(5), Divisor.point(5, 3, 5))
    assert not equivalent(Divisor([1, 0, 0]), Divisor([0, 0, 0]))
    with pytest.raises(ValueError):
        equivalent(Divisor([0, 0]), Divisor([0, 0, 0]))


def test_line_equivalent_to_every_point_multiple():
    for n in range(2, 8):
        for j in range(1, n + 1):
            assert equivalent(line_divisor(n), Divisor.point(n, j, n))


def test_concentrate_examples():
    assert concentrate(Divisor([0, 2, 0, 6, 1])) == Divisor([1, 3, 1, 2, 2])
    assert concentrate(Divisor([0] * 5)) == Divisor([0] * 5)
    C = concentrate(Divisor([0, 0, 0, 9]))
    assert C == Divisor([2, 2, 2, 3])
    assert oracle.generic_equivalent(oracle.complete_graph(4), (0, 0, 0, 9), C.coeffs)


@given(divisors())
def test_reduced_form_idempotent_and_reduced(D):
    R = reduced_form(D)
    assert is_vn_reduced(R)
    assert reduced_form(R) == R
    assert degree(R) == degree(D)


@given(divisors())
def test_trace_consistent_and_monotone(D):
    R, trace = reduce_with_trace(D)
    assert trace.is_consistent()
    assert trace.final == R
    burning = [d for f, d in trace.steps if f != frozenset({D.n})]
    sums = [sum(d.coeffs[:-1]) for d in burning]
    assert all(a > b for a, b in zip(sums, sums[1:]))
    assert all(is_effective_away(d, D.n) for d in burning)


@given(divisors(lo=-30, hi=40))
def test_concentrate_correct(D):
    C = concentrate(D)
    assert is_concentrated(C)
    assert equivalent(C, D)
    assert degree(C) == degree(D)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_translate_invariance(n):
    rng = random.Random(100 + n)
    for _ in range(200):
        D = Divisor(rng.randint(-4, 8) for _ in range(n))
        P = random_lattice_translate(rng, n)
        assert reduced_form(D + P) == reduced_form(D)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_parking_iff_dhar_fixed(n):
    for head in product(range(0, 9), repeat=n - 1):
        D = Divisor(head + (0,))
        R, trace = dhar_reduce(D)
        assert is_vn_reduced(D) == (len(trace) == 0), D
        assert is_vn_reduced(D) == (R == D)


@settings(max_examples=60)
@given(divisors(n=4, lo=-4, hi=6))
def test_kn_reduce_agrees_with_generic_burning(D):
    G = oracle.complete_graph(4)
    for q in range(1, 5):
        assert reduce_at(D, q).coeffs == oracle.general_dhar_reduce(G, D.coeffs, q)
