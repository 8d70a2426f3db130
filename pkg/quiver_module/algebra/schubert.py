"""
Schubert polynomials and their universal and stable relatives.

Double Schubert polynomials computed here by divided differences are the
oracle every tableau formula in ``quiver_core`` is checked against.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import sympy

from combinatorics.permcore import (
    Permutation,
    PermutationError,
    rank_fn,
    reduced_factorizations,
    reduced_words,
    shift,
    simple_reflection,
)
from combinatorics.shapes import Partition, conjugate, parse_column_word

from .polyring import (
    ONE,
    ZERO,
    ArithmeticInvariantError,
    Polynomial,
    chern,
    divided_difference,
    elementary,
    schur_polynomial,
    x,
    y,
)

LOGGER = logging.getLogger("quiver.schubert")

SchurExpansion = Dict[Partition, int]
EExpansion = Dict[Tuple[int, ...], int]
RankConditions = Dict[Tuple[int, int], int]

ASCENT_CHOICES = ("smallest", "largest")


def _top_polynomial(n: int, double: bool) -> Polynomial:
    """S_{w0} of S_n: prod_{i+j<=n} (x_i - y_j), or x_1^{n-1} x_2^{n-2} ... without y."""
    product = ONE
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            product = product * (x(i) - y(j) if double else x(i))
    return product


def _ascents(w: Permutation, n: int) -> List[int]:
    return [i for i in range(1, n) if w(i) < w(i + 1)]


@lru_cache(maxsize=8192)
def _schubert(window: Tuple[int, ...], n: int, ascent: str, double: bool) -> Polynomial:
    # S_w = d_i S_{w s_i} for an ascent i of w; memoised so chains towards w0 are shared
    w = Permutation(window)
    options = _ascents(w, n)
    if not options:
        return _top_polynomial(n, double)
    i = options[0] if ascent == "smallest" else options[-1]
    return divided_difference(_schubert((w * simple_reflection(i)).window, n, ascent, double), i)


def _check_schubert_args(w: Permutation, n: Optional[int], ascent: str) -> int:
    n = max(w.size, 1) if n is None else n
    if not w.in_group(n):
        raise PermutationError(f"{w} does not belong to S_{n}")
    if ascent not in ASCENT_CHOICES:
        raise ValueError(f"ascent must be one of {ASCENT_CHOICES}, got {ascent!r}")
    return n


def double_schubert(w: Permutation, n: Optional[int] = None, ascent: str = "smallest") -> Polynomial:
    """S_w(X;Y) by divided differences from the longest element of S_n.

    Args:
        w: Permutation in S_n.
        n: Symmetric group to work in; defaults to the smallest one holding w.
        ascent: Which ascent to climb at each step, "smallest" or "largest".

    Raises:
        PermutationError: if w is not in S_n.
    """
    n = _check_schubert_args(w, n, ascent)
    return _schubert(w.window, n, ascent, True)


def single_schubert(w: Permutation, n: Optional[int] = None, ascent: str = "smallest") -> Polynomial:
    """S_w(X), started from x_1^{n-1} ... x_{n-1} instead of specialising the double polynomial."""
    n = _check_schubert_args(w, n, ascent)
    return _schubert(w.window, n, ascent, False)


@lru_cache(maxsize=4096)
def _tableau_counts(window: Tuple[int, ...], max_entry: Optional[int], floor: int) -> Tuple[Tuple[Partition, int], ...]:
    tally: Counter = Counter()
    for word in reduced_words(Permutation(window)):
        for tableau in parse_column_word(word, max_entry, floor):
            tally[conjugate(tableau.outer)] += 1
    return tuple(sorted(tally.items()))


def tableau_counts(
    w: Permutation, max_entry: Optional[int] = None, min_entry_exclusive: int = 0
) -> SchurExpansion:
    """Count tableaux of shape alpha' whose column word is reduced for *w*, keyed by alpha."""
    return dict(_tableau_counts(w.window, max_entry, min_entry_exclusive))


def stanley_schur_expansion(w: Permutation) -> SchurExpansion:
    """Schur coefficients d_{w,alpha} of the Stanley function F_w."""
    return tableau_counts(w)


def evaluate_schur_expansion(expansion: Mapping[Partition, int], k: int) -> Polynomial:
    total = ZERO
    for alpha, coeff in expansion.items():
        total = total + coeff * schur_polynomial(alpha, k)
    return total


def stanley_truncation(w: Permutation, k: int, m: int) -> Polynomial:
    """S_{1^m x w}(x_1, ..., x_k, 0, 0, ...) for m >= k."""

    if m < k:
        raise ValueError(f"Truncation needs m >= k, got m={m}, k={k}")
    polynomial = single_schubert(shift(w, m))
    dropped = {var: 0 for var in polynomial.variables() if var.family == "x" and var.index > k}
    return polynomial.substitute(dropped)


def _e_keys(n: int, total: int) -> Iterator[Tuple[int, ...]]:
    for key in itertools.product(*(range(alpha + 1) for alpha in range(1, n + 1))):
        if sum(key) == total:
            yield key


def _e_product(key: Tuple[int, ...]) -> Polynomial:
    product = ONE
    for alpha, degree in enumerate(key, 1):
        product = product * elementary(degree, [x(i) for i in range(1, alpha + 1)])
    return product


@lru_cache(maxsize=4096)
def _e_expansion(window: Tuple[int, ...], n: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    w = Permutation(window)
    target = single_schubert(w)
    keys = list(_e_keys(n, w.length()))
    products = [_e_product(key) for key in keys]
    monomials = sorted(
        {monomial for product in products for monomial in product.terms} | set(target.terms),
        key=lambda monomial: tuple((var.sort_key, exp) for var, exp in monomial),
    )
    matrix = sympy.Matrix(
        [[product.terms.get(monomial, 0) for product in products] for monomial in monomials]
    )
    rhs = sympy.Matrix([target.terms.get(monomial, 0) for monomial in monomials])
    try:
        solution, parameters = matrix.gauss_jordan_solve(rhs)
    except ValueError as exc:
        raise ArithmeticInvariantError(f"No e-expansion found for {w}") from exc
    if parameters.shape[0]:
        raise ArithmeticInvariantError(f"e-expansion of {w} is not unique")
    result = []
    for key, value in zip(keys, solution):
        if not value.is_integer:
            raise ArithmeticInvariantError(f"Non-integral e-expansion coefficient {value} for {w}")
        if value:
            result.append((key, int(value)))
    return tuple(result)


def e_expansion(w: Permutation, n: Optional[int] = None) -> EExpansion:
    """Integers a with S_w(X) = sum a * e_{i_1}(x_1) e_{i_2}(x_1,x_2) ... e_{i_n}(x_1..x_n)."""
    n = max(w.size - 1, 1) if n is None else n
    if not w.in_group(n + 1):
        raise PermutationError(f"{w} does not belong to S_{n + 1}")
    return dict(_e_expansion(w.window, n))


def universal_single(w: Permutation, family: str = "c") -> Polynomial:
    """sum a_{i_1..i_n} c_{i_1}(1) ... c_{i_n}(n) over the e-expansion of S_w."""
    total = ZERO
    for key, coeff in e_expansion(w).items():
        term = Polynomial.constant(coeff)
        for column, degree in enumerate(key, 1):
            term = term * chern(family, degree, column)
        total = total + term
    return total


def _inner_bound(w: Permutation) -> int:
    return max(w.size - 1, 1)


def universal_double(w: Permutation, upper: str = "c", lower: str = "d") -> Polynomial:
    """sum over u.v = w of (-1)^l(u) S_{u^-1}(lower) S_v(upper)."""
    bound = _inner_bound(w)
    total = ZERO
    for u, v in reduced_factorizations(w, 2, (bound, bound)):
        term = universal_single(u.inverse(), lower) * universal_single(v, upper)
        total = total - term if u.length() % 2 else total + term
    return total


def quiver_rank_conditions(w: Permutation, n: int) -> RankConditions:
    """Rank conditions r_{ij}, 1 <= i <= j <= 2n, of the quiver locus attached to w in S_{n+1}."""
    if not w.in_group(n + 1):
        raise PermutationError(f"{w} does not belong to S_{n + 1}")
    conditions: RankConditions = {}
    for i in range(1, 2 * n + 1):
        for j in range(i, 2 * n + 1):
            if i <= n < j:
                conditions[(i, j)] = rank_fn(w, 2 * n + 1 - j, i)
            elif j <= n:
                conditions[(i, j)] = i
            else:
                conditions[(i, j)] = 2 * n + 1 - j
    return conditions


def expected_codimension(conditions: RankConditions) -> int:
    size = max(j for _, j in conditions)
    return sum(
        (conditions[(i, j - 1)] - conditions[(i, j)]) * (conditions[(i + 1, j)] - conditions[(i, j)])
        for i in range(1, size + 1)
        for j in range(i + 1, size + 1)
    )
