"""
Permutations, reduced words, partitions and tableaux.
"""

from .permcore import (
    Permutation,
    PermutationError,
    descents,
    from_word,
    is_compatible,
    length,
    longest_element,
    rank_fn,
    reduced_factorizations,
    reduced_words,
    shift,
    simple_reflection,
    w0_conjugate,
)
from .shapes import (
    EMPTY,
    Partition,
    PartitionError,
    SkewShape,
    Tableau,
    column_word,
    conjugate,
    enumerate_ssyt,
    parse_column_word,
    parse_skew_column_word,
    rotate180,
)

__all__ = [
    "Permutation",
    "PermutationError",
    "descents",
    "from_word",
    "is_compatible",
    "length",
    "longest_element",
    "rank_fn",
    "reduced_factorizations",
    "reduced_words",
    "shift",
    "simple_reflection",
    "w0_conjugate",
    "EMPTY",
    "Partition",
    "PartitionError",
    "SkewShape",
    "Tableau",
    "column_word",
    "conjugate",
    "enumerate_ssyt",
    "parse_column_word",
    "parse_skew_column_word",
    "rotate180",
]
