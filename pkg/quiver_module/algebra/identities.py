"""Identities among universal Schubert polynomials, written as right-hand sides to compare against."""

from __future__ import annotations

from typing import Callable, Dict

from combinatorics.permcore import Permutation, reduced_factorizations

from .polyring import ZERO, Polynomial, Variable
from .schubert import universal_double


def _factor_pairs(w: Permutation):
    bound = max(w.size - 1, 1)
    return reduced_factorizations(w, 2, (bound, bound))


def _replace_columns(
    polynomial: Polynomial, family: str, keep: Callable[[int], bool], target: str | None
) -> Polynomial:
    """Send every variable of *family* whose column fails *keep* to the *target* family (None for zero)."""
    assignment: Dict[Variable, Polynomial | int] = {}
    for var in polynomial.variables():
        if var.family == family and not keep(var.column):
            assignment[var] = 0 if target is None else Polynomial.var(Variable(target, var.index, var.column))
    return polynomial.substitute(assignment)


def same_specialization(w: Permutation, m: int) -> Polynomial:
    """S_w(c;d) with b(j) substituted for both c(j) and d(j) at every column j >= m+1."""
    polynomial = _replace_columns(universal_double(w), "c", lambda column: column <= m, "b")
    return _replace_columns(polynomial, "d", lambda column: column <= m, "b")


def same_expected(w: Permutation, m: int) -> Polynomial:
    return universal_double(w) if w.in_group(m + 1) else ZERO


def cauchy_expansion(w: Permutation) -> Polynomial:
    """sum over u.v = w of S_u(b;d) S_v(c;b)."""
    total = ZERO
    for u, v in _factor_pairs(w):
        total = total + universal_double(u, "b", "d") * universal_double(v, "c", "b")
    return total


def split_upper_expansion(w: Permutation, r: int) -> Polynomial:
    """sum over u.v = w of S_u(0,..,0,c(r+1),..; d) S_v(c(1),..,c(r); 0)."""
    total = ZERO
    for u, v in _factor_pairs(w):
        left = _replace_columns(universal_double(u), "c", lambda column: column > r, None)
        right = universal_double(v).specialize_zero({"d"})
        right = _replace_columns(right, "c", lambda column: column <= r, None)
        total = total + left * right
    return total


def split_lower_expansion(w: Permutation, r: int) -> Polynomial:
    """sum over u.v = w of S_u(0; d(1),..,d(r)) S_v(c; 0,..,0,d(r+1),..)."""
    total = ZERO
    for u, v in _factor_pairs(w):
        left = universal_double(u).specialize_zero({"c"})
        left = _replace_columns(left, "d", lambda column: column <= r, None)
        right = _replace_columns(universal_double(v), "d", lambda column: column > r, None)
        total = total + left * right
    return total
