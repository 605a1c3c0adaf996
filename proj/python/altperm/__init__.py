"""Alternating permutations containing 321 or 123 exactly once.

Permutations are lists of ints in one-line notation; alternation classes are
"UD" (up-down) and "DU" (down-up); counts are exact Python ints.
"""

from ._altperm import (
    DecompositionRecord,
    DecompositionStream,
    InternalInconsistency,
    InvalidRecord,
    InvariantViolation,
    NotAlternating,
    NotExactlyOne,
    OutOfValidityRange,
    PermutationStream,
    boundary_count,
    boundary_statistics,
    catalan,
    classify,
    closed_form_even_123,
    closed_form_even_321,
    closed_form_odd,
    complement,
    convolution_even_321,
    convolution_odd_321,
    count,
    count_occurrences,
    decomposition_sum,
    enumerate_by_decomposition,
    euler_zigzag,
    exactly_once_count,
    find_occurrences,
    generate,
    locate_unique_321,
    reconstruct,
    reverse,
    split,
    standardize,
    table1_formula,
    table1_oracle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
