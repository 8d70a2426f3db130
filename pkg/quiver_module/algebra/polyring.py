"""
Sparse exact polynomials over the alphabets x_i, y_i and the Chern-class
families c_i(j), d_i(j), b_i(j), together with divided differences and
Schur determinants.
"""

from __future__ import annotations

import dataclasses
import logging
from collections import defaultdict
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

from combinatorics.shapes import Partition

LOGGER = logging.getLogger("quiver.polyring")

FAMILY_ORDER = ("x", "y", "c", "d", "b")
POINT_FAMILIES = frozenset({"x", "y"})
CHERN_FAMILIES = frozenset({"c", "d", "b"})


class ArithmeticInvariantError(RuntimeError):
    """Raised when an exact computation that must succeed does not (inexact division, singular solve)."""


@dataclasses.dataclass(frozen=True, slots=True)
class Variable:
    """x_i / y_i carry one index; c_i(j), d_i(j), b_i(j) carry degree i and column j."""

    family: str
    index: int
    column: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILY_ORDER:
            raise ValueError(f"Unknown variable family {self.family!r}")
        if self.index < 1:
            raise ValueError(f"Variable index must be positive: {self}")
        if self.family in CHERN_FAMILIES and not 1 <= self.index <= self.column:
            raise ValueError(f"Chern variable needs 1 <= i <= j: {self.family}_{self.index}({self.column})")

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        return FAMILY_ORDER.index(self.family), self.index, self.column

    def __lt__(self, other: "Variable") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if self.family in POINT_FAMILIES:
            return f"{self.family}_{self.index}"
        return f"{self.family}_{self.index}({self.column})"


Monomial = Tuple[Tuple[Variable, int], ...]
Coercible = Union["Polynomial", int]


def _monomial(powers: Mapping[Variable, int]) -> Monomial:
    return tuple(sorted(((var, exp) for var, exp in powers.items() if exp), key=lambda item: item[0].sort_key))


def _multiply_monomials(left: Monomial, right: Monomial) -> Monomial:
    if not left:
        return right
    if not right:
        return left
    powers: Dict[Variable, int] = dict(left)
    for var, exp in right:
        powers[var] = powers.get(var, 0) + exp
    return _monomial(powers)


def _term_order(monomial: Monomial) -> Tuple:
    return tuple((var.sort_key, -exp) for var, exp in monomial)


class Polynomial:
    """Immutable mapping from monomials to nonzero integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None) -> None:
        cleaned = {monomial: int(coeff) for monomial, coeff in (terms or {}).items() if coeff}
        self._terms = MappingProxyType(cleaned)
        self._hash: Optional[int] = None

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls({(): value})

    @classmethod
    def var(cls, variable: Variable) -> "Polynomial":
        return cls({((variable, 1),): 1})

    @classmethod
    def coerce(cls, value: Coercible) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"Cannot use {type(value).__name__} as a polynomial")

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda item: _term_order(item[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Coercible) -> "Polynomial":
        other = Polynomial.coerce(other)
        merged = dict(self._terms)
        for monomial, coeff in other._terms.items():
            merged[monomial] = merged.get(monomial, 0) + coeff
        return Polynomial(merged)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({monomial: -coeff for monomial, coeff in self._terms.items()})

    def __sub__(self, other: Coercible) -> "Polynomial":
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other: Coercible) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def __mul__(self, other: Coercible) -> "Polynomial":
        other = Polynomial.coerce(other)
        if not self._terms or not other._terms:
            return ZERO
        product: Dict[Monomial, int] = defaultdict(int)
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                product[_multiply_monomials(left, right)] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def degree(self) -> int:
        return max((sum(exp for _, exp in monomial) for monomial in self._terms), default=-1)

    def variables(self) -> List[Variable]:
        return sorted({var for monomial in self._terms for var, _ in monomial}, key=lambda var: var.sort_key)

    def coefficient(self, powers: Mapping[Variable, int]) -> int:
        return self._terms.get(_monomial(powers), 0)

    def substitute(self, assignment: Mapping[Variable, Coercible]) -> "Polynomial":
        """Replace variables by polynomials; variables not in *assignment* stay."""

        if not assignment:
            return self
        images = {var: Polynomial.coerce(value) for var, value in assignment.items()}
        power_cache: Dict[Tuple[Variable, int], Polynomial] = {}
        result: Dict[Monomial, int] = defaultdict(int)
        for monomial, coeff in self._terms.items():
            kept: Dict[Variable, int] = {}
            factor = Polynomial.constant(coeff)
            for var, exp in monomial:
                if var in images:
                    key = (var, exp)
                    if key not in power_cache:
                        power_cache[key] = images[var] ** exp
                    factor = factor * power_cache[key]
                    if not factor:
                        break
                else:
                    kept[var] = exp
            if not factor:
                continue
            stem = _monomial(kept)
            for other, value in factor._terms.items():
                result[_multiply_monomials(stem, other)] += value
        return Polynomial(result)

    def specialize_zero(self, families: Iterable[str]) -> "Polynomial":
        """Set every variable of the given families to zero."""
        families = frozenset(families)
        return Polynomial(
            {
                monomial: coeff
                for monomial, coeff in self._terms.items()
                if not any(var.family in families for var, _ in monomial)
            }
        )

    def swap_x(self, i: int) -> "Polynomial":
        """Exchange x_i and x_{i+1}."""
        left, right = Variable("x", i), Variable("x", i + 1)
        swapped: Dict[Monomial, int] = {}
        for monomial, coeff in self._terms.items():
            powers = {
                (right if var == left else left if var == right else var): exp
                for var, exp in monomial
            }
            swapped[_monomial(powers)] = coeff
        return Polynomial(swapped)

    def to_sympy(self) -> sympy.Expr:
        symbols: Dict[Variable, sympy.Symbol] = {}
        expression = sympy.Integer(0)
        for monomial, coeff in self._terms.items():
            term = sympy.Integer(coeff)
            for var, exp in monomial:
                if var not in symbols:
                    symbols[var] = sympy.Symbol(str(var).replace("(", "_").replace(")", ""))
                term *= symbols[var] ** exp
            expression += term
        return sympy.expand(expression)

    def to_terms(self) -> List[Tuple[List[Tuple[str, int]], int]]:
        """Terms as ([(variable, exponent), ...], coefficient) in canonical order."""
        return [([(str(var), exp) for var, exp in monomial], coeff) for monomial, coeff in self.sorted_terms()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for monomial, coeff in self.sorted_terms():
            body = "*".join(str(var) if exp == 1 else f"{var}^{exp}" for var, exp in monomial)
            magnitude = abs(coeff)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


ZERO = Polynomial()
ONE = Polynomial.constant(1)

PolyLike = Union[Polynomial, int]
Alphabet = Sequence[PolyLike]


def x(i: int) -> Polynomial:
    return Polynomial.var(Variable("x", i))


def y(i: int) -> Polynomial:
    return Polynomial.var(Variable("y", i))


def chern(family: str, i: int, j: int) -> Polynomial:
    """c_i(j) with c_0(j) = 1 and c_i(j) = 0 outside 0 <= i <= j."""
    if i == 0:
        return ONE
    if i < 0 or i > j:
        return ZERO
    return Polynomial.var(Variable(family, i, j))


def chern_alphabet(family: str, j: int) -> List[Polynomial]:
    """[c_1(j), ..., c_j(j)]; column 0 is the empty alphabet."""
    return [chern(family, i, j) for i in range(1, j + 1)]


def elementary(k: int, values: Sequence[PolyLike]) -> Polynomial:
    """e_k of the given values, by the usual one-step recurrence."""
    if k < 0 or k > len(values):
        return ZERO
    row: List[Polynomial] = [ONE] + [ZERO] * k
    for value in values:
        for degree in range(k, 0, -1):
            row[degree] = row[degree] + row[degree - 1] * value
    return row[k]


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), by synthetic division with an exactness check."""

    if i < 1:
        raise ValueError(f"Divided difference index must be positive, got {i}")
    numerator = f - f.swap_x(i)
    if not numerator:
        return ZERO

    lead, follow = Variable("x", i), Variable("x", i + 1)
    by_power: Dict[int, Dict[Monomial, int]] = defaultdict(dict)
    for monomial, coeff in numerator.terms.items():
        powers = dict(monomial)
        exponent = powers.pop(lead, 0)
        by_power[exponent][_monomial(powers)] = coeff

    top = max(by_power)
    next_x = Polynomial.var(follow)
    quotient = ZERO
    carry = ZERO
    # numerator = (lead - follow) * sum_k q_k lead^k  =>  q_{k-1} = g_k + follow * q_k
    for exponent in range(top, 0, -1):
        carry = Polynomial(by_power.get(exponent, {})) + next_x * carry
        quotient = quotient + carry * Polynomial.var(lead) ** (exponent - 1)
    remainder = Polynomial(by_power.get(0, {})) + next_x * carry
    if remainder:
        raise ArithmeticInvariantError(f"Divided difference d_{i} left remainder {remainder}")
    return quotient


def h_series(c_alphabet: Alphabet, d_alphabet: Alphabet, top: int) -> List[Polynomial]:
    """h_0..h_top of (1 - d_1 t + d_2 t^2 - ...) / (1 - c_1 t + c_2 t^2 - ...)."""

    c_values = [Polynomial.coerce(value) for value in c_alphabet]
    d_values = [Polynomial.coerce(value) for value in d_alphabet]

    def signed(values: List[Polynomial], k: int) -> Polynomial:
        if k == 0:
            return ONE
        if k > len(values):
            return ZERO
        return values[k - 1] if k % 2 == 0 else -values[k - 1]

    series: List[Polynomial] = []
    for k in range(top + 1):
        value = signed(d_values, k)
        for i in range(1, min(k, len(c_values)) + 1):
            value = value - signed(c_values, i) * series[k - i]
        series.append(value)
    return series


def h_k(c_alphabet: Alphabet, d_alphabet: Alphabet, k: int) -> Polynomial:
    if k < 0:
        return ZERO
    return h_series(c_alphabet, d_alphabet, k)[k]


def _determinant(matrix: List[List[Polynomial]]) -> Polynomial:
    size = len(matrix)

    @lru_cache(maxsize=None)
    def minor(row: int, columns: Tuple[int, ...]) -> Polynomial:
        if row == size:
            return ONE
        total = ZERO
        for position, column in enumerate(columns):
            entry = matrix[row][column]
            if not entry:
                continue
            rest = columns[:position] + columns[position + 1 :]
            term = entry * minor(row + 1, rest)
            total = total - term if position % 2 else total + term
        return total

    return minor(0, tuple(range(size)))


def schur_det(alpha: Partition, c_alphabet: Alphabet, d_alphabet: Alphabet) -> Polynomial:
    """s_alpha(c - d) = det(h_{alpha_i + j - i}) by cofactor expansion."""

    rows = len(alpha)
    if rows == 0:
        return ONE
    series = h_series(c_alphabet, d_alphabet, alpha[0] + rows - 1)

    def entry(k: int) -> Polynomial:
        return series[k] if k >= 0 else ZERO

    matrix = [[entry(alpha[i] + j - i) for j in range(rows)] for i in range(rows)]
    return _determinant(matrix)


def super_schur(alpha: Partition, x_set: Sequence[PolyLike], y_set: Sequence[PolyLike]) -> Polynomial:
    """s_alpha(X/Y): the Schur determinant at c_i = e_i(X), d_i = e_i(Y)."""
    c_alphabet = [elementary(k, x_set) for k in range(1, len(x_set) + 1)]
    d_alphabet = [elementary(k, y_set) for k in range(1, len(y_set) + 1)]
    return schur_det(alpha, c_alphabet, d_alphabet)


def schur_polynomial(alpha: Partition, k: int) -> Polynomial:
    """Ordinary Schur polynomial s_alpha(x_1, ..., x_k)."""
    return super_schur(alpha, [x(i) for i in range(1, k + 1)], [])


def x_block(start: int, stop: int) -> List[Polynomial]:
    """x_start, ..., x_stop (inclusive); empty when stop < start."""
    return [x(i) for i in range(start, stop + 1)]


def y_block(start: int, stop: int) -> List[Polynomial]:
    return [y(i) for i in range(start, stop + 1)]
