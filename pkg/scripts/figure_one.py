#!/usr/bin/env python3
"""Walk the K_5 example divisor (0,2,0,6,1) through reduction, concentration
and the splitting-type readout, printing every intermediate divisor."""

from kn_divisors import (
    Divisor,
    concentrate,
    degree,
    rank,
    rank_from_splitting,
    splitting_type,
    super_sort,
)
from kn_divisors.reduce import reduce_with_trace


def main():
    D = Divisor([0, 2, 0, 6, 1])
    print(f"D = ({D})  degree {degree(D)}")
    R, trace = reduce_with_trace(D)
    for fired, after in trace.steps:
        print(f"  fire {{{', '.join(f'v{v}' for v in sorted(fired))}}} -> ({after})")
    print(f"v_5-reduced: ({R})")
    m = R.coeffs[-1] // R.n
    print(f"m = {m}; concentrated: ({concentrate(D)})")
    S_div, _ = super_sort(concentrate(D))
    print(f"super sorted: ({S_div})")
    for i, a in enumerate(S_div.coeffs, start=1):
        print(f"  e_{i} = {a} - {i} + 1 = {a - i + 1}")
    S = splitting_type(D)
    print(f"splitting type ({S}), rank {rank(D)}")
    for k in range(-2, 3):
        print(f"  k={k:+d}: rank(D + kL) = {rank_from_splitting(S, k)}")


if __name__ == "__main__":
    main()
