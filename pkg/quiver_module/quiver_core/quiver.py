"""
Quiver coefficients of a permutation as counts of tableau sequences.

A coefficient table maps a sequence of partitions (lambda^1, ..., lambda^r) to
the number of sequences of semistandard tableaux (T_1, ..., T_r) where T_i has
shape conjugate to lambda^i, its entries lie in a per-position window
(floor_i, top_i], and col(T_1)...col(T_r) is a reduced word for w.

Two strategies compute the same tables:

- ``baseline`` splits every reduced word into r consecutive segments and
  parses each segment into tableaux;
- ``dp`` peels off one parabolic left factor per position and memoises the
  table of every remaining suffix permutation.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from algebra.polyring import ZERO, ArithmeticInvariantError, Polynomial, chern_alphabet, schur_det
from algebra.schubert import stanley_schur_expansion, tableau_counts
from combinatorics.permcore import (
    Permutation,
    PermutationError,
    left_parabolic_factors,
    reduced_factorizations,
    reduced_words,
)
from combinatorics.shapes import (
    EMPTY,
    Partition,
    column_word,
    conjugate,
    parse_column_word,
    rotate180,
)
from utils.common import timing_decorator

LOGGER = logging.getLogger("quiver.quiver")

LambdaKey = Tuple[Partition, ...]
SchurSeqExpansion = Dict[LambdaKey, int]
# (floor, top): entries must satisfy floor < e <= top; top None means unbounded
Window = Tuple[int, Optional[int]]

STRATEGIES = ("dp", "baseline")


def sorted_table(table: Mapping[LambdaKey, int]) -> SchurSeqExpansion:
    return {key: coeff for key, coeff in sorted(table.items()) if coeff}


def position_bound(i: int, n: int) -> int:
    return min(i, 2 * n - i)


def quiver_windows(n: int) -> Tuple[Window, ...]:
    return tuple((0, position_bound(i, n)) for i in range(1, 2 * n))


def check_group(w: Permutation, n: int) -> None:
    if n < 1:
        raise PermutationError(f"n must be at least 1, got {n}")
    if not w.in_group(n + 1):
        raise PermutationError(f"{w} does not belong to S_{n + 1}")


@lru_cache(maxsize=200_000)
def _segment_keys(segment: Tuple[int, ...], floor: int, top: Optional[int], skew: bool) -> Tuple[Partition, ...]:
    if not segment:
        return (EMPTY,)
    if not skew:
        return tuple(conjugate(tableau.outer) for tableau in parse_column_word(segment, top, floor))

    if floor != 0 or top is None:
        raise ValueError("Skew parsing needs a finite upper bound and no lower bound.")
    complement = tuple(top + 1 - letter for letter in reversed(segment))
    keys: List[Partition] = []
    for straight in parse_column_word(complement, top, 0):
        key = conjugate(straight.outer)
        skew_tableau = straight.rotated(top)
        expected = rotate180(key)
        if column_word(skew_tableau) != segment or (skew_tableau.outer, skew_tableau.inner) != (
            expected.outer,
            expected.inner,
        ):
            raise ArithmeticInvariantError(f"Rotation does not transport segment {segment}")
        keys.append(key)
    return tuple(keys)


def _letter_fits(letter: int, window: Window) -> bool:
    floor, top = window
    return letter > floor and (top is None or letter <= top)


def word_table(word: Tuple[int, ...], windows: Tuple[Window, ...], skew: bool = False) -> Counter:
    """Tally every split of one reduced word into len(windows) parsable segments."""

    tally: Counter = Counter()
    last = len(windows) - 1

    def walk(position: int, start: int, prefix: LambdaKey) -> None:
        floor, top = windows[position]
        if position == last:
            for key in _segment_keys(word[start:], floor, top, skew):
                tally[prefix + (key,)] += 1
            return
        for stop in range(start, len(word) + 1):
            if stop > start and not _letter_fits(word[stop - 1], windows[position]):
                break
            for key in _segment_keys(word[start:stop], floor, top, skew):
                walk(position + 1, stop, prefix + (key,))

    walk(0, 0, ())
    return tally


def _word_chunk(words: Sequence[Tuple[int, ...]], windows: Tuple[Window, ...], skew: bool) -> Counter:
    tally: Counter = Counter()
    for word in words:
        tally.update(word_table(word, windows, skew))
    return tally


def _baseline_table(w: Permutation, windows: Tuple[Window, ...], skew: bool, workers: int) -> Counter:
    words = reduced_words(w)
    if workers <= 1 or len(words) < 2 * workers:
        return _word_chunk(words, windows, skew)

    chunks = [words[index::workers] for index in range(workers)]
    tally: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for partial in pool.map(_word_chunk, chunks, itertools.repeat(windows), itertools.repeat(skew)):
            tally.update(partial)
    return tally


def _dp_table(w: Permutation, windows: Tuple[Window, ...]) -> Counter:
    largest_letter = max(w.size - 1, 0)

    @lru_cache(maxsize=None)
    def suffix(position: int, window: Tuple[int, ...]) -> Tuple[Tuple[LambdaKey, int], ...]:
        if position == len(windows):
            return (((), 1),) if not window else ()
        floor, top = windows[position]
        letter_cap = largest_letter if top is None else min(top, largest_letter)
        tally: Counter = Counter()
        for u, rest in left_parabolic_factors(Permutation(window), letter_cap, floor):
            tail = suffix(position + 1, rest.window)
            if not tail:
                continue
            for alpha, count in tableau_counts(u, top, floor).items():
                for key, multiplicity in tail:
                    tally[(alpha,) + key] += count * multiplicity
        return tuple(tally.items())

    return Counter(dict(suffix(0, w.window)))


def tableau_sequence_table(
    w: Permutation,
    windows: Sequence[Window],
    *,
    strategy: str = "dp",
    workers: int = 1,
    skew: bool = False,
) -> SchurSeqExpansion:
    """Count tableau sequences with per-position entry windows whose column word is reduced for *w*."""

    windows = tuple(windows)
    if not windows:
        raise ValueError("At least one tableau position is required.")
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    if skew or strategy == "baseline":
        tally = _baseline_table(w, windows, skew, workers)
    else:
        tally = _dp_table(w, windows)
    LOGGER.debug("%s: %d tableau-sequence classes over %d positions", w, len(tally), len(windows))
    return sorted_table(tally)


@timing_decorator
def quiver_coefficients(
    w: Permutation, n: int, *, strategy: str = "dp", workers: int = 1, logger: Optional[logging.Logger] = None
) -> SchurSeqExpansion:
    """Quiver coefficients c^(n)_{w,lambda} over 2n-1 positions, entries of T_i at most min(i, 2n-i)."""
    check_group(w, n)
    table = tableau_sequence_table(w, quiver_windows(n), strategy=strategy, workers=workers)
    if logger:
        logger.info("Quiver table for %s (n=%d): %d entries", w, n, len(table))
    return table


@timing_decorator
def quiver_coefficients_skew(
    w: Permutation, n: int, *, workers: int = 1, logger: Optional[logging.Logger] = None
) -> SchurSeqExpansion:
    """The same coefficients counted on rotated skew tableaux.

    Each segment is parsed by rotating a straight parse of its reversed and
    complemented word, using the entry bound of that position.
    """
    check_group(w, n)
    table = tableau_sequence_table(w, quiver_windows(n), strategy="baseline", workers=workers, skew=True)
    if logger:
        logger.info("Skew quiver table for %s (n=%d): %d entries", w, n, len(table))
    return table


def stanley_product(w: Permutation, n: int) -> SchurSeqExpansion:
    """Sum over bounded reduced factorizations of the tensor product of Stanley expansions."""

    check_group(w, n)
    bounds = [position_bound(i, n) for i in range(1, 2 * n)]
    tally: Counter = Counter()
    for factors in reduced_factorizations(w, 2 * n - 1, bounds):
        expansions = [list(stanley_schur_expansion(u).items()) for u in factors]
        for choice in itertools.product(*expansions):
            coeff = 1
            for _, value in choice:
                coeff *= value
            tally[tuple(alpha for alpha, _ in choice)] += coeff
    return sorted_table(tally)


@lru_cache(maxsize=20_000)
def universal_factor(alpha: Partition, position: int, n: int) -> Polynomial:
    """s_alpha of the Chern-class difference attached to *position* of the 2n-1 positions."""
    if position < n:
        upper, lower = chern_alphabet("d", position + 1), chern_alphabet("d", position)
    elif position == n:
        upper, lower = chern_alphabet("c", n), chern_alphabet("d", n)
    else:
        upper, lower = chern_alphabet("c", 2 * n - position), chern_alphabet("c", 2 * n + 1 - position)
    return schur_det(alpha, upper, lower)


def expand_universal(table: Mapping[LambdaKey, int], n: int) -> Polynomial:
    total = ZERO
    for key, coeff in table.items():
        if len(key) != 2 * n - 1:
            raise ValueError(f"Table key {key} does not have {2 * n - 1} positions")
        term = Polynomial.constant(coeff)
        for position, alpha in enumerate(key, 1):
            if alpha:
                term = term * universal_factor(alpha, position, n)
        total = total + term
    return total


def restrict(table: Mapping[LambdaKey, int], p: int, q: int) -> SchurSeqExpansion:
    """Keep only the entries whose partitions are empty outside positions p..q (1-based)."""
    return sorted_table(
        {
            key: coeff
            for key, coeff in table.items()
            if all(not alpha for position, alpha in enumerate(key, 1) if position < p or position > q)
        }
    )


def convolve(left: Mapping[LambdaKey, int], right: Mapping[LambdaKey, int]) -> SchurSeqExpansion:
    """Product of two tables whose supports occupy disjoint positions."""

    tally: Counter = Counter()
    for left_key, a in left.items():
        for right_key, b in right.items():
            if len(left_key) != len(right_key):
                raise ValueError("Tables of different arity cannot be multiplied.")
            merged: List[Partition] = []
            for alpha, beta in zip(left_key, right_key):
                if alpha and beta:
                    raise ValueError("Overlapping supports need Littlewood-Richardson products.")
                merged.append(alpha or beta)
            tally[tuple(merged)] += a * b
    return sorted_table(tally)


def split_convolution(w: Permutation, n: int, i: int, *, strategy: str = "dp") -> SchurSeqExpansion:
    """sum over u.v = w of P_u[1, i-1] * P_v[i, 2n-1]."""

    check_group(w, n)
    if not 1 < i <= 2 * n - 1:
        raise ValueError(f"Split position must satisfy 1 < i <= {2 * n - 1}, got {i}")
    tally: Counter = Counter()
    for u, v in reduced_factorizations(w, 2, (n, n)):
        left = restrict(quiver_coefficients(u, n, strategy=strategy), 1, i - 1)
        right = restrict(quiver_coefficients(v, n, strategy=strategy), i, 2 * n - 1)
        tally.update(convolve(left, right))
    return sorted_table(tally)


def single_position_expected(w: Permutation, n: int, i: int) -> SchurSeqExpansion:
    """F_w placed at position i when w fits the window min(i, 2n-i), else nothing."""
    if not w.in_group(position_bound(i, n) + 1):
        return {}
    table: SchurSeqExpansion = {}
    for alpha, coeff in stanley_schur_expansion(w).items():
        key = [EMPTY] * (2 * n - 1)
        key[i - 1] = alpha
        table[tuple(key)] = coeff
    return sorted_table(table)


def degrees_conserved(table: Mapping[LambdaKey, int], w: Permutation) -> bool:
    target = w.length()
    return all(sum(alpha.size for alpha in key) == target for key in table)


def empty_key(arity: int) -> LambdaKey:
    return tuple([EMPTY] * arity)

