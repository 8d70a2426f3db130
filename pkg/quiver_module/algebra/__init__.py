"""
Exact polynomial arithmetic and Schubert-type polynomials.
"""

from .polyring import (
    ONE,
    ZERO,
    ArithmeticInvariantError,
    Polynomial,
    Variable,
    chern,
    chern_alphabet,
    divided_difference,
    elementary,
    h_k,
    schur_det,
    schur_polynomial,
    super_schur,
    x,
    y,
)
from .schubert import (
    double_schubert,
    e_expansion,
    expected_codimension,
    quiver_rank_conditions,
    single_schubert,
    stanley_schur_expansion,
    stanley_truncation,
    universal_double,
    universal_single,
)

__all__ = [
    "ONE",
    "ZERO",
    "ArithmeticInvariantError",
    "Polynomial",
    "Variable",
    "chern",
    "chern_alphabet",
    "divided_difference",
    "elementary",
    "h_k",
    "schur_det",
    "schur_polynomial",
    "super_schur",
    "x",
    "y",
    "double_schubert",
    "e_expansion",
    "expected_codimension",
    "quiver_rank_conditions",
    "single_schubert",
    "stanley_schur_expansion",
    "stanley_truncation",
    "universal_double",
    "universal_single",
]
