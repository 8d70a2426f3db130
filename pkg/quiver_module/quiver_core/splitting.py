"""
Splitting formulas: double and single Schubert polynomials as sums of
products of (supersymmetric) Schur polynomials in blocks of variables.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
from typing import List, Mapping, NamedTuple, Sequence, Tuple

from algebra.polyring import ZERO, Polynomial, super_schur, x_block, y_block
from combinatorics.permcore import Permutation, reduced_words
from combinatorics.shapes import schur_vanishes

from .placement import validate_sequence
from .quiver import LambdaKey, SchurSeqExpansion, Window, sorted_table, tableau_sequence_table

LOGGER = logging.getLogger("quiver.splitting")


@dataclasses.dataclass(frozen=True, slots=True)
class SplitPosition:
    """Entry floor and the variable blocks of one tableau position."""

    floor: int
    x_vars: Tuple[Polynomial, ...]
    y_vars: Tuple[Polynomial, ...]

    def vanishes(self, alpha) -> bool:
        return schur_vanishes(alpha, len(self.x_vars), len(self.y_vars))

    def factor(self, alpha) -> Polynomial:
        return super_schur(alpha, self.x_vars, self.y_vars)


class SplitExpansion(NamedTuple):
    table: SchurSeqExpansion
    polynomial: Polynomial


def double_split_positions(a_seq: Sequence[int], b_seq: Sequence[int]) -> List[SplitPosition]:
    """Positions (0/Y_q), ..., (0/Y_2), (X_1/Y_1), X_2, ..., X_p with floors (b_{q-1},..,b_1,0,a_1,..,a_{p-1})."""

    p, q = len(a_seq), len(b_seq)
    a_ext, b_ext = (0,) + tuple(a_seq), (0,) + tuple(b_seq)
    positions: List[SplitPosition] = []
    for k in range(q, 1, -1):
        positions.append(SplitPosition(b_ext[k - 1], (), tuple(y_block(b_ext[k - 1] + 1, b_ext[k]))))
    positions.append(SplitPosition(0, tuple(x_block(1, a_ext[1])), tuple(y_block(1, b_ext[1]))))
    for k in range(2, p + 1):
        positions.append(SplitPosition(a_ext[k - 1], tuple(x_block(a_ext[k - 1] + 1, a_ext[k])), ()))
    return positions


def single_split_positions(a_seq: Sequence[int]) -> List[SplitPosition]:
    a_ext = (0,) + tuple(a_seq)
    return [
        SplitPosition(a_ext[k - 1], tuple(x_block(a_ext[k - 1] + 1, a_ext[k])), ())
        for k in range(1, len(a_seq) + 1)
    ]


def expand_split(table: Mapping[LambdaKey, int], positions: Sequence[SplitPosition]) -> Polynomial:
    """sum c_lambda prod_i s_{lambda^i}(X_i / Y_i) over the given blocks."""
    total = ZERO
    for key, coeff in table.items():
        term = Polynomial.constant(coeff)
        for alpha, position in zip(key, positions):
            if alpha:
                term = term * position.factor(alpha)
                if not term:
                    break
        total = total + term
    return total


def _split(
    w: Permutation,
    positions: Sequence[SplitPosition],
    *,
    strategy: str,
    keep_vanishing: bool,
) -> SplitExpansion:
    windows: Tuple[Window, ...] = tuple((position.floor, None) for position in positions)
    table = tableau_sequence_table(w, windows, strategy=strategy)
    if not keep_vanishing:
        surviving = {
            key: coeff
            for key, coeff in table.items()
            if not any(position.vanishes(alpha) for alpha, position in zip(key, positions))
        }
        LOGGER.debug("%s: %d of %d split terms survive the hook condition", w, len(surviving), len(table))
        table = sorted_table(surviving)
    return SplitExpansion(table, expand_split(table, positions))


def split_double_schubert(
    w: Permutation,
    a_seq: Sequence[int],
    b_seq: Sequence[int],
    *,
    strategy: str = "dp",
    keep_vanishing: bool = False,
) -> SplitExpansion:
    """Split S_w(X;Y) along a (compatible with w) and b (compatible with w^-1).

    Terms whose Schur factor vanishes on its block are dropped unless
    *keep_vanishing* is set; they contribute nothing to the polynomial.
    """
    a_seq = validate_sequence(a_seq, w, lowest=1, label="a")
    b_seq = validate_sequence(b_seq, w.inverse(), lowest=0, label="b")
    return _split(w, double_split_positions(a_seq, b_seq), strategy=strategy, keep_vanishing=keep_vanishing)


def split_single(
    w: Permutation,
    a_seq: Sequence[int],
    *,
    strategy: str = "dp",
    keep_vanishing: bool = False,
) -> SplitExpansion:
    """Split S_w(X) into products of Schur polynomials in the blocks X_1, ..., X_p cut by a."""
    a_seq = validate_sequence(a_seq, w, lowest=1, label="a")
    return _split(w, single_split_positions(a_seq), strategy=strategy, keep_vanishing=keep_vanishing)


def _increasing(run: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(run, run[1:]))


def _decreasing(run: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(run, run[1:]))


def monomial_coefficient(w: Permutation, u_exps: Sequence[int], v_exps: Sequence[int] = ()) -> int:
    """Coefficient of x^u y^v in S_w(X;Y), counted on reduced words cut into monotone runs.

    With g_i = v_{n-i} + ... + v_{n-1} and f_i = g_{n-1} + u_1 + ... + u_i, a
    reduced word counts when, for every i, its letters g_{i-1}+1..g_i increase
    starting at n-i or above, and its letters f_{i-1}+1..f_i decrease ending at
    i or above. The sign is (-1)^{g_{n-1}}.
    """

    if any(value < 0 for value in itertools.chain(u_exps, v_exps)):
        raise ValueError("Exponents must be non-negative.")
    if sum(u_exps) + sum(v_exps) != w.length():
        return 0
    n = max(w.size, len(u_exps) + 1, len(v_exps) + 1, 1)
    u = list(u_exps) + [0] * (n - 1 - len(u_exps))
    v = list(v_exps) + [0] * (n - 1 - len(v_exps))

    g = [0] * n
    for i in range(1, n):
        g[i] = g[i - 1] + v[n - i - 1]
    f = [g[n - 1]] * n
    for i in range(1, n):
        f[i] = f[i - 1] + u[i - 1]

    count = 0
    for word in reduced_words(w):
        valid = True
        for i in range(1, n):
            rising = word[g[i - 1] : g[i]]
            falling = word[f[i - 1] : f[i]]
            if rising and (not _increasing(rising) or rising[0] < n - i):
                valid = False
                break
            if falling and (not _decreasing(falling) or falling[-1] < i):
                valid = False
                break
        if valid:
            count += 1
    return -count if g[n - 1] % 2 else count


def monomial_exponents(polynomial: Polynomial, n: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...], int]]:
    """Split each term of an x/y polynomial into (u, v, coefficient) with u, v of length n-1."""
    rows = []
    for monomial, coeff in polynomial.sorted_terms():
        u, v = [0] * (n - 1), [0] * (n - 1)
        for var, exp in monomial:
            (u if var.family == "x" else v)[var.index - 1] = exp
        rows.append((tuple(u), tuple(v), coeff))
    return rows
