"""
Placement of quiver coefficients when only some of the bundles are kept.

Keeping G_{b_1} -> ... -> G_{b_q} -> F_{a_p} -> ... -> F_{a_1} out of the full
sequence, a coefficient table over 2n-1 positions collapses onto p+q-1
positions. Each kept difference sits where it lands once every skipped bundle
is padded by a trivial summand:

    G_{b_{k+1}} - G_{b_k}  at position b_{k+1} - 1
    F_{a_p} - G_{b_q}      at position n
    F_{a_k} - F_{a_{k+1}}  at position 2n + 1 - a_{k+1}
"""

from __future__ import annotations

import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from algebra.polyring import ZERO, Polynomial, Variable, chern, chern_alphabet, schur_det
from combinatorics.permcore import Permutation

from .quiver import LambdaKey, SchurSeqExpansion, check_group, sorted_table

LOGGER = logging.getLogger("quiver.placement")


class IncompatibleSequenceError(ValueError):
    """Raised for sequences that are not strictly increasing, leave their range, or miss a descent."""


def validate_sequence(
    sequence: Sequence[int], w: Permutation, *, lowest: int, highest: Optional[int] = None, label: str = "a"
) -> Tuple[int, ...]:
    """Check that *sequence* is strictly increasing in [lowest, highest] and holds every descent of *w*."""

    sequence = tuple(sequence)
    if not sequence:
        raise IncompatibleSequenceError(f"Sequence {label} must not be empty.")
    if any(b <= a for a, b in zip(sequence, sequence[1:])):
        raise IncompatibleSequenceError(f"Sequence {label}={sequence} must be strictly increasing.")
    if sequence[0] < lowest or (highest is not None and sequence[-1] > highest):
        bound = "" if highest is None else highest
        raise IncompatibleSequenceError(f"Sequence {label}={sequence} must lie in {lowest}..{bound}.")
    missing = sorted(set(w.descents()) - set(sequence))
    if missing:
        raise IncompatibleSequenceError(
            f"Sequence {label}={sequence} is not compatible with {w}: descents {missing} are missing."
        )
    return sequence


def placement_positions(n: int, a_seq: Sequence[int], b_seq: Sequence[int]) -> List[int]:
    """1-based positions of the 2n-1 table that feed mu^1, ..., mu^{p+q-1}."""
    q, p = len(b_seq), len(a_seq)
    g_side = [b_seq[k] - 1 for k in range(1, q)]
    f_side = [2 * n + 1 - a_seq[k] for k in range(p - 1, 0, -1)]
    return g_side + [n] + f_side


def place_coefficients(
    table: Mapping[LambdaKey, int],
    n: int,
    a_seq: Sequence[int],
    b_seq: Sequence[int],
    *,
    w: Permutation,
) -> SchurSeqExpansion:
    """Collapse a quiver table of *w* onto the kept bundles; entries with mass elsewhere drop out."""

    check_group(w, n)
    a_seq = validate_sequence(a_seq, w, lowest=1, highest=n, label="a")
    b_seq = validate_sequence(b_seq, w.inverse(), lowest=1, highest=n, label="b")
    positions = placement_positions(n, a_seq, b_seq)
    kept = set(positions)
    placed: SchurSeqExpansion = {}
    dropped = 0
    for key, coeff in table.items():
        if any(alpha for position, alpha in enumerate(key, 1) if position not in kept):
            dropped += 1
            continue
        mu = tuple(key[position - 1] for position in positions)
        placed[mu] = placed.get(mu, 0) + coeff
    LOGGER.debug("Placed %d entries for %s, dropped %d", len(placed), w, dropped)
    return sorted_table(placed)


def placed_alphabets(
    a_seq: Sequence[int], b_seq: Sequence[int]
) -> List[Tuple[List[Polynomial], List[Polynomial]]]:
    """(upper, lower) Chern alphabets of each kept difference, in mu order."""
    q, p = len(b_seq), len(a_seq)
    pairs = [(chern_alphabet("d", b_seq[k]), chern_alphabet("d", b_seq[k - 1])) for k in range(1, q)]
    pairs.append((chern_alphabet("c", a_seq[-1]), chern_alphabet("d", b_seq[-1])))
    pairs.extend((chern_alphabet("c", a_seq[k - 1]), chern_alphabet("c", a_seq[k])) for k in range(p - 1, 0, -1))
    return pairs


def expand_placed(table: Mapping[LambdaKey, int], a_seq: Sequence[int], b_seq: Sequence[int]) -> Polynomial:
    alphabets = placed_alphabets(a_seq, b_seq)
    total = ZERO
    for key, coeff in table.items():
        term = Polynomial.constant(coeff)
        for alpha, (upper, lower) in zip(key, alphabets):
            if alpha:
                term = term * schur_det(alpha, upper, lower)
        total = total + term
    return total


def _kept_column(column: int, kept: Sequence[int]) -> int:
    below = [value for value in kept if value <= column]
    return below[-1] if below else 0


def padding_assignment(
    n: int, a_seq: Sequence[int], b_seq: Sequence[int]
) -> Dict[Variable, Polynomial]:
    """Chern variables of skipped bundles rewritten as the nearest kept bundle below (or zero)."""

    assignment: Dict[Variable, Polynomial] = {}
    for family, kept in (("c", a_seq), ("d", b_seq)):
        for column in range(1, n + 1):
            if column in kept:
                continue
            target = _kept_column(column, kept)
            for degree in range(1, column + 1):
                assignment[Variable(family, degree, column)] = chern(family, degree, target)
    return assignment
