"""
Quiver coefficients, splitting formulas and the command-line surface built on them.
"""

from .giambelli import GiambelliExpression, giambelli, giambelli_I, giambelli_II
from .logging_utils import configure_logging
from .placement import IncompatibleSequenceError, expand_placed, place_coefficients
from .quiver import (
    expand_universal,
    quiver_coefficients,
    quiver_coefficients_skew,
    stanley_product,
    tableau_sequence_table,
)
from .splitting import SplitExpansion, monomial_coefficient, split_double_schubert, split_single

__all__ = [
    "GiambelliExpression",
    "giambelli",
    "giambelli_I",
    "giambelli_II",
    "configure_logging",
    "IncompatibleSequenceError",
    "expand_placed",
    "place_coefficients",
    "expand_universal",
    "quiver_coefficients",
    "quiver_coefficients_skew",
    "stanley_product",
    "tableau_sequence_table",
    "SplitExpansion",
    "monomial_coefficient",
    "split_double_schubert",
    "split_single",
]
