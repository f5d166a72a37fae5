"""Divisor theory on complete graphs: reduced and concentrated forms, ranks,
splitting types, and a brute-force oracle on general multigraphs."""

from .divisor import (
    Divisor,
    Permutation,
    ReductionTrace,
    canonical_divisor,
    degree,
    fire_set,
    fire_vertex,
    format_divisor,
    genus,
    is_concentrated,
    is_effective,
    is_effective_away,
    is_super_sorted,
    is_vn_reduced,
    line_divisor,
    linear_combination,
    parse_divisor,
    super_sort,
)
from .enumeration import enumerate_splitting_types, is_feasible_splitting, witness_divisor
from .rank import (
    RankFormulaInputs,
    SplittingType,
    rank,
    rank_from_splitting,
    rank_nonspecial_check,
    riemann_roch_residual,
    splitting_type,
    twist,
)
from .reduce import (
    concentrate,
    dhar_reduce,
    equivalent,
    make_effective_away,
    reduce_at,
    reduced_form,
)

__version__ = "0.1.0"
