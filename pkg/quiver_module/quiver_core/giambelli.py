"""
Giambelli formulas for partial flag varieties.

For a flag of quotients of ranks a_1 < ... < a_p < n, the Schubert class of a
compatible permutation is written either in the Schur classes of the
successive kernels Q_k (formula I, coefficients from the single splitting
formula) or in the Schur classes of F_{a_p} and of the differences
F_{a_k} - F_{a_{k+1}} (formula II, coefficients read off the quiver table).

Both expressions are symbolic. ``expand`` substitutes Chern roots
(F_j has roots x_1..x_j, Q_k has roots x_{a_{k-1}+1}..x_{a_k}) and must
return the single Schubert polynomial of the permutation.
"""

from __future__ import annotations

import dataclasses
import logging
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from algebra.polyring import ZERO, Polynomial, super_schur, x_block
from combinatorics.permcore import Permutation
from combinatorics.shapes import Partition

from .placement import IncompatibleSequenceError, placement_positions, validate_sequence
from .quiver import quiver_coefficients
from .splitting import split_single

LOGGER = logging.getLogger("quiver.giambelli")

FORMS = ("I", "II")


@dataclasses.dataclass(frozen=True, slots=True)
class ClassSymbol:
    """A bundle or bundle difference; *upper*/*lower* are inclusive x-index ranges of its Chern roots."""

    name: str
    upper: Tuple[int, int]
    lower: Tuple[int, int] = (1, 0)

    def schur_class(self, alpha: Partition) -> Polynomial:
        return super_schur(alpha, x_block(*self.upper), x_block(*self.lower))

    def __str__(self) -> str:
        return self.name


class GiambelliTerm(NamedTuple):
    coeff: int
    factors: Tuple[Tuple[ClassSymbol, Partition], ...]


@dataclasses.dataclass(frozen=True)
class GiambelliExpression:
    form: str
    w: Permutation
    a_seq: Tuple[int, ...]
    n: int
    symbols: Tuple[ClassSymbol, ...]
    terms: Tuple[GiambelliTerm, ...]

    def shape_table(self) -> Dict[Tuple[Partition, ...], int]:
        """Coefficients keyed by the partitions attached to ``symbols``, in that order."""
        table: Dict[Tuple[Partition, ...], int] = {}
        for term in self.terms:
            by_symbol = {symbol.name: alpha for symbol, alpha in term.factors}
            key = tuple(by_symbol.get(symbol.name, Partition()) for symbol in self.symbols)
            table[key] = table.get(key, 0) + term.coeff
        return table

    def expand(self) -> Polynomial:
        total = ZERO
        for term in self.terms:
            value = Polynomial.constant(term.coeff)
            for symbol, alpha in term.factors:
                value = value * symbol.schur_class(alpha)
            total = total + value
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        rendered: List[str] = []
        for term in self.terms:
            factors = [f"s_{{{','.join(map(str, alpha))}}}({symbol})" for symbol, alpha in term.factors]
            if not factors:
                rendered.append(str(term.coeff))
            elif term.coeff == 1:
                rendered.append("*".join(factors))
            else:
                rendered.append(f"{term.coeff}*" + "*".join(factors))
        return " + ".join(rendered)


def _check_flag(w: Permutation, a_seq: Sequence[int], n: int) -> Tuple[int, ...]:
    if n < 2:
        raise IncompatibleSequenceError(f"The ambient rank n must be at least 2, got {n}.")
    a_seq = validate_sequence(a_seq, w, lowest=1, label="a")
    if a_seq[-1] >= n:
        raise IncompatibleSequenceError(f"Sequence a={a_seq} must stay below n={n}.")
    return a_seq


def _terms(rows: Sequence[Tuple[Tuple[Partition, ...], int]], symbols: Sequence[ClassSymbol]) -> Tuple[GiambelliTerm, ...]:
    return tuple(
        GiambelliTerm(coeff, tuple((symbol, alpha) for symbol, alpha in zip(symbols, key) if alpha))
        for key, coeff in rows
    )


def kernel_symbols(a_seq: Sequence[int]) -> Tuple[ClassSymbol, ...]:
    bounds = (0,) + tuple(a_seq)
    return tuple(ClassSymbol(f"Q_{k}", (bounds[k - 1] + 1, bounds[k])) for k in range(1, len(a_seq) + 1))


def flag_symbols(a_seq: Sequence[int]) -> Tuple[ClassSymbol, ...]:
    """F_{a_p}, F_{a_{p-1}}-F_{a_p}, ..., F_{a_1}-F_{a_2}: the order of nu^p, ..., nu^1."""
    symbols = [ClassSymbol(f"F_{a_seq[-1]}", (1, a_seq[-1]))]
    for k in range(len(a_seq) - 1, 0, -1):
        low, high = a_seq[k - 1], a_seq[k]
        symbols.append(ClassSymbol(f"F_{low}-F_{high}", (1, low), (1, high)))
    return tuple(symbols)


def flag_positions(n: int, a_seq: Sequence[int]) -> Tuple[int, ...]:
    """Quiver positions feeding ``flag_symbols``: the placement of (a, (n,)), whose G side is trivial."""
    return tuple(placement_positions(n, a_seq, (n,)))


def giambelli_I(w: Permutation, a_seq: Sequence[int], n: int, *, strategy: str = "dp") -> GiambelliExpression:
    a_seq = _check_flag(w, a_seq, n)
    symbols = kernel_symbols(a_seq)
    table = split_single(w, a_seq, strategy=strategy).table
    return GiambelliExpression("I", w, a_seq, n, symbols, _terms(list(table.items()), symbols))


def giambelli_II(
    w: Permutation,
    a_seq: Sequence[int],
    n: int,
    *,
    strategy: str = "dp",
    logger: Optional[logging.Logger] = None,
) -> GiambelliExpression:
    """Formula II from the quiver table of w, keeping entries supported on the flag positions."""

    a_seq = _check_flag(w, a_seq, n)
    symbols = flag_symbols(a_seq)
    positions = flag_positions(n, a_seq)
    kept = set(positions)
    table = quiver_coefficients(w, n, strategy=strategy, logger=logger)
    rows = []
    for key, coeff in table.items():
        if any(alpha for position, alpha in enumerate(key, 1) if position not in kept):
            continue
        rows.append((tuple(key[position - 1] for position in positions), coeff))
    LOGGER.debug("Formula II for %s keeps %d of %d quiver entries", w, len(rows), len(table))
    return GiambelliExpression("II", w, a_seq, n, symbols, _terms(sorted(rows), symbols))


def giambelli(
    w: Permutation, a_seq: Sequence[int], n: int, form: str = "I", *, strategy: str = "dp"
) -> GiambelliExpression:
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    if form == "I":
        return giambelli_I(w, a_seq, n, strategy=strategy)
    return giambelli_II(w, a_seq, n, strategy=strategy)
