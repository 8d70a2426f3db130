"""
Permutations in one-line notation, reduced words and reduced factorizations.

Products follow one fixed convention throughout the package: ``u * v`` is the
composition u∘v, so ``v`` is applied first. A word (e_1, ..., e_l) stands for
s_{e_1}∘...∘s_{e_l}.
"""

from __future__ import annotations

import dataclasses
import itertools
from functools import lru_cache
from typing import Iterable, Iterator, List, Sequence, Tuple

ReducedWord = Tuple[int, ...]


class PermutationError(ValueError):
    """Raised for malformed permutations or permutations outside a requested S_n."""


def _strip_fixed_points(values: Sequence[int]) -> Tuple[int, ...]:
    window = list(values)
    while window and window[-1] == len(window):
        window.pop()
    return tuple(window)


@dataclasses.dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of the positive integers fixing everything past its window.

    The stored window is minimal: trailing fixed points are stripped on
    construction, so equality does not depend on the symmetric group used.
    """

    window: Tuple[int, ...]

    def __init__(self, values: Iterable[int] = ()) -> None:
        values = tuple(int(value) for value in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise PermutationError(f"Not a permutation of 1..{len(values)}: {values}")
        object.__setattr__(self, "window", _strip_fixed_points(values))

    @classmethod
    def identity(cls) -> "Permutation":
        return cls(())

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse compact ("32541") or comma-separated ("10,2,3,...") one-line notation."""

        text = text.strip()
        if not text:
            raise PermutationError("Empty permutation string.")
        try:
            if "," in text:
                values = [int(part) for part in text.split(",") if part.strip()]
            else:
                values = [int(char) for char in text]
        except ValueError as exc:
            raise PermutationError(f"Invalid one-line notation: {text!r}") from exc
        return cls(values)

    @property
    def size(self) -> int:
        """Smallest n with this permutation in S_n (0 for the identity)."""
        return len(self.window)

    def __call__(self, j: int) -> int:
        if 1 <= j <= len(self.window):
            return self.window[j - 1]
        return j

    def one_line(self, n: int | None = None) -> List[int]:
        """Return w(1), ..., w(n), padding with fixed points."""
        n = self.size if n is None else n
        if n < self.size:
            raise PermutationError(f"{self} does not belong to S_{n}")
        return [self(j) for j in range(1, n + 1)]

    def __str__(self) -> str:
        values = self.one_line(max(self.size, 1))
        if len(values) <= 9:
            return "".join(str(value) for value in values)
        return ",".join(str(value) for value in values)

    def __repr__(self) -> str:
        return f"Permutation('{self}')"

    def __mul__(self, other: "Permutation") -> "Permutation":
        n = max(self.size, other.size)
        return Permutation(self(other(j)) for j in range(1, n + 1))

    def in_group(self, n: int) -> bool:
        return self.size <= n

    def length(self) -> int:
        return sum(
            1
            for i, j in itertools.combinations(range(self.size), 2)
            if self.window[i] > self.window[j]
        )

    def descents(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, self.size) if self(i) > self(i + 1))

    def inverse(self) -> "Permutation":
        values = [0] * self.size
        for position, value in enumerate(self.window, 1):
            values[value - 1] = position
        return Permutation(values)

    def code(self) -> Tuple[int, ...]:
        """Lehmer code: c_i = #{j > i : w(j) < w(i)}."""
        return tuple(
            sum(1 for j in range(i + 1, self.size) if self.window[j] < self.window[i])
            for i in range(self.size)
        )


def simple_reflection(i: int) -> Permutation:
    """Return s_i = (i, i+1)."""
    if i < 1:
        raise PermutationError(f"Simple reflection index must be positive, got {i}")
    values = list(range(1, i + 2))
    values[i - 1], values[i] = values[i], values[i - 1]
    return Permutation(values)


def from_word(word: Iterable[int]) -> Permutation:
    """Multiply s_{e_1}∘...∘s_{e_l}."""
    values: List[int] = []
    for letter in word:
        if letter < 1:
            raise PermutationError(f"Word letters must be positive, got {letter}")
        if len(values) < letter + 1:
            values.extend(range(len(values) + 1, letter + 2))
        # right multiplication by s_e swaps window positions e and e+1
        values[letter - 1], values[letter] = values[letter], values[letter - 1]
    return Permutation(values)


def is_reduced_word(word: Sequence[int], w: Permutation) -> bool:
    return from_word(word) == w and len(word) == w.length()


def length(w: Permutation) -> int:
    return w.length()


def rank_fn(w: Permutation, p: int, q: int) -> int:
    """r_w(p, q) = #{i <= p : w(i) <= q}."""
    if p < 0 or q < 0:
        raise PermutationError(f"Rank arguments must be non-negative, got ({p}, {q})")
    return sum(1 for i in range(1, p + 1) if w(i) <= q)


def rank_matrix(w: Permutation, n: int) -> List[List[int]]:
    """Rows p = 1..n, columns q = 1..n of the rank function."""
    return [[rank_fn(w, p, q) for q in range(1, n + 1)] for p in range(1, n + 1)]


def descents(w: Permutation) -> Tuple[int, ...]:
    return w.descents()


def is_compatible(sequence: Sequence[int], w: Permutation) -> bool:
    """True when every descent of *w* occurs in the increasing *sequence*."""
    if any(b <= a for a, b in zip(sequence, sequence[1:])):
        raise PermutationError(f"Sequence must be strictly increasing: {tuple(sequence)}")
    return set(w.descents()) <= set(sequence)


def inverse(w: Permutation) -> Permutation:
    return w.inverse()


def multiply(u: Permutation, v: Permutation) -> Permutation:
    return u * v


def longest_element(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def w0_conjugate(w: Permutation, n: int) -> Permutation:
    """Return w0 w^{-1} w0 for the longest element w0 of S_n."""
    if not w.in_group(n):
        raise PermutationError(f"{w} does not belong to S_{n}")
    w0 = longest_element(n)
    return w0 * w.inverse() * w0


def shift(w: Permutation, m: int) -> Permutation:
    """Return 1^m x w: the identity on 1..m and j -> w(j-m)+m beyond."""
    if m < 0:
        raise PermutationError(f"Shift must be non-negative, got {m}")
    return Permutation(list(range(1, m + 1)) + [value + m for value in w.window])


def all_permutations(n: int) -> List[Permutation]:
    """All of S_n, in lexicographic order of one-line notation."""
    return [Permutation(values) for values in itertools.permutations(range(1, n + 1))]


@lru_cache(maxsize=None)
def _reduced_words(window: Tuple[int, ...]) -> Tuple[ReducedWord, ...]:
    w = Permutation(window)
    if not w.window:
        return ((),)
    words = set()
    for i in w.descents():
        shorter = w * simple_reflection(i)
        for word in _reduced_words(shorter.window):
            words.add(word + (i,))
    return tuple(sorted(words))


def reduced_words(w: Permutation) -> List[ReducedWord]:
    """All reduced words for *w*, in lexicographic order."""
    return list(_reduced_words(w.window))


def right_parabolic_factors(
    w: Permutation, bound: int, floor: int = 0
) -> Iterator[Tuple[Permutation, Permutation]]:
    """Yield (rest, u) with rest·u = w reduced and u generated by s_{floor+1}..s_bound.

    Every such u is produced exactly once, the identity first.
    """
    seen = {Permutation.identity()}
    frontier = [(w, Permutation.identity())]
    yield w, Permutation.identity()
    while frontier:
        following = []
        for rest, u in frontier:
            for i in rest.descents():
                if i <= floor or i > bound:
                    continue
                s = simple_reflection(i)
                grown = s * u
                if grown in seen:
                    continue
                seen.add(grown)
                item = (rest * s, grown)
                following.append(item)
                yield item
        frontier = following


def left_parabolic_factors(
    w: Permutation, bound: int, floor: int = 0
) -> Iterator[Tuple[Permutation, Permutation]]:
    """Yield (u, rest) with u·rest = w reduced and u generated by s_{floor+1}..s_bound."""
    for rest, u in right_parabolic_factors(w.inverse(), bound, floor):
        yield u.inverse(), rest.inverse()


def reduced_factorizations(
    w: Permutation, r: int, bounds: Sequence[int]
) -> List[Tuple[Permutation, ...]]:
    """All (u_1, ..., u_r) with u_i in S_{m_i+1}, lengths adding up, and u_1∘...∘u_r = w.

    Args:
        w: Permutation to factor.
        r: Number of factors.
        bounds: Window bounds m_1..m_r.

    Returns:
        A sorted, duplicate-free list of factor tuples.
    """
    if r < 1 or len(bounds) != r:
        raise PermutationError(f"Need r >= 1 window bounds, got r={r}, bounds={tuple(bounds)}")
    if any(bound < 1 for bound in bounds):
        raise PermutationError(f"Window bounds must be positive: {tuple(bounds)}")

    @lru_cache(maxsize=None)
    def factor(window: Tuple[int, ...], count: int) -> Tuple[Tuple[Permutation, ...], ...]:
        target = Permutation(window)
        if count == 1:
            return ((target,),) if target.in_group(bounds[0] + 1) else ()
        results = []
        for rest, u in right_parabolic_factors(target, bounds[count - 1]):
            for prefix in factor(rest.window, count - 1):
                results.append(prefix + (u,))
        return tuple(results)

    found = factor(w.window, r)
    return sorted(found, key=lambda factors: [u.one_line(max(w.size, 1)) for u in factors])
