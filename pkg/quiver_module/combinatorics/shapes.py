"""
Partitions, skew shapes and semistandard tableaux.

Tableaux are read through their column word: columns from left to right, each
column from bottom to top. Parsing a word back into tableaux is the membership
test behind every tableau-counting formula in the package.
"""

from __future__ import annotations

import dataclasses
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union


class PartitionError(ValueError):
    """Raised when a sequence is not a partition or a skew shape is malformed."""


@dataclasses.dataclass(frozen=True, slots=True, order=True)
class Partition:
    """Weakly decreasing positive parts; trailing zeros are dropped on input."""

    parts: Tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()) -> None:
        values = [int(part) for part in parts]
        while values and values[-1] == 0:
            values.pop()
        if any(part <= 0 for part in values):
            raise PartitionError(f"Partition parts must be positive: {tuple(values)}")
        if any(b > a for a, b in zip(values, values[1:])):
            raise PartitionError(f"Partition parts must weakly decrease: {tuple(values)}")
        object.__setattr__(self, "parts", tuple(values))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        """Part lookup that answers 0 past the last row."""
        return self.parts[index] if 0 <= index < len(self.parts) else 0

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.parts) + ")" if self.parts else "∅"

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(b <= self[i] for i, b in enumerate(other))

    def to_list(self) -> List[int]:
        return list(self.parts)


EMPTY = Partition()


def conjugate(alpha: Partition) -> Partition:
    if not alpha:
        return EMPTY
    return Partition(sum(1 for part in alpha if part > column) for column in range(alpha[0]))


@dataclasses.dataclass(frozen=True, slots=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise PartitionError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_span(self, row: int) -> Tuple[int, int]:
        """Half-open column range [start, stop) occupied in *row*."""
        return self.inner[row], self.outer[row]

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


Shape = Union[Partition, SkewShape]


def rotate180(alpha: Partition) -> SkewShape:
    """Rotate the diagram of the conjugate of *alpha* by 180 degrees inside its bounding box."""

    transposed = conjugate(alpha)
    if not transposed:
        return SkewShape(EMPTY, EMPTY)
    height, width = len(transposed), transposed[0]
    outer = Partition([width] * height)
    inner = Partition(width - transposed[height - 1 - row] for row in range(height))
    return SkewShape(outer, inner)


@dataclasses.dataclass(frozen=True, slots=True)
class Tableau:
    """A filling of a straight or skew shape.

    ``rows[r]`` lists the entries of row r (top row first) from left to right,
    covering only the cells of the skew part.
    """

    outer: Partition
    inner: Partition
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        SkewShape(self.outer, self.inner)
        if len(self.rows) != len(self.outer):
            raise PartitionError("Tableau rows do not match its shape.")
        for row, entries in enumerate(self.rows):
            if len(entries) != self.outer[row] - self.inner[row]:
                raise PartitionError(f"Row {row + 1} has the wrong number of cells.")

    @classmethod
    def straight(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        rows = tuple(tuple(row) for row in rows if row)
        return cls(Partition(len(row) for row in rows), EMPTY, rows)

    @property
    def shape(self) -> Shape:
        if not self.inner:
            return self.outer
        return SkewShape(self.outer, self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def cells(self) -> Iterator[Tuple[int, int, int]]:
        """Yield (row, column, entry) for every cell."""
        for row, entries in enumerate(self.rows):
            for offset, entry in enumerate(entries):
                yield row, self.inner[row] + offset, entry

    def entry(self, row: int, column: int) -> Optional[int]:
        start, stop = self.inner[row], self.outer[row]
        if 0 <= row < len(self.rows) and start <= column < stop:
            return self.rows[row][column - start]
        return None

    def entries(self) -> List[int]:
        return [entry for _, _, entry in self.cells()]

    def is_semistandard(self) -> bool:
        for row, column, value in self.cells():
            right = self.entry(row, column + 1)
            if right is not None and right < value:
                return False
            below = self.entry(row + 1, column) if row + 1 < len(self.rows) else None
            if below is not None and below <= value:
                return False
        return True

    def rotated(self, bound: int) -> "Tableau":
        """Turn the tableau on its head inside its bounding box, replacing e by bound+1-e.

        Semistandardness is preserved and the column word is reversed and
        complemented, so this is the bijection between straight and skew
        fillings with entries at most *bound*.
        """

        if any(entry > bound or entry < 1 for entry in self.entries()):
            raise PartitionError(f"Entries must lie in 1..{bound} to rotate.")
        height = len(self.outer)
        width = self.outer[0] if height else 0
        new_outer = [width - self.inner[height - 1 - row] for row in range(height)]
        new_inner = [width - self.outer[height - 1 - row] for row in range(height)]
        new_rows = [
            tuple(bound + 1 - entry for entry in reversed(self.rows[height - 1 - row]))
            for row in range(height)
        ]
        # rows the inner shape covered completely end up empty at the bottom
        while new_outer and new_outer[-1] == 0:
            new_outer.pop()
            new_inner.pop()
            new_rows.pop()
        return Tableau(Partition(new_outer), Partition(new_inner), tuple(new_rows))

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


def column_word(tableau: Tableau) -> Tuple[int, ...]:
    height = len(tableau.rows)
    width = tableau.outer[0] if height else 0
    word: List[int] = []
    for column in range(width):
        for row in reversed(range(height)):
            value = tableau.entry(row, column)
            if value is not None:
                word.append(value)
    return tuple(word)


def _column_compositions(total: int, limit: int) -> Iterator[Tuple[int, ...]]:
    """Weakly decreasing compositions of *total* with parts at most *limit*."""
    if total == 0:
        yield ()
        return
    for first in range(min(total, limit), 0, -1):
        for rest in _column_compositions(total - first, first):
            yield (first,) + rest


@lru_cache(maxsize=200_000)
def _parse(word: Tuple[int, ...], max_entry: Optional[int], floor: int) -> Tuple[Tableau, ...]:
    if any(letter <= floor for letter in word):
        return ()
    if max_entry is not None and any(letter > max_entry for letter in word):
        return ()
    found: List[Tableau] = []
    for lengths in _column_compositions(len(word), len(word)):
        columns: List[Tuple[int, ...]] = []
        position = 0
        valid = True
        for length in lengths:
            segment = word[position : position + length]
            position += length
            if any(b >= a for a, b in zip(segment, segment[1:])):
                valid = False
                break
            columns.append(tuple(reversed(segment)))
        if not valid:
            continue
        if any(
            right[row] < left[row]
            for left, right in zip(columns, columns[1:])
            for row in range(len(right))
        ):
            continue
        rows = [
            tuple(column[row] for column in columns if len(column) > row)
            for row in range(lengths[0] if lengths else 0)
        ]
        found.append(Tableau.straight(rows))
    found.sort(key=lambda tableau: tableau.outer)
    return tuple(found)


def parse_column_word(
    word: Sequence[int],
    max_entry: Optional[int] = None,
    min_entry_exclusive: int = 0,
) -> List[Tableau]:
    """All straight semistandard tableaux whose column word is *word*.

    Args:
        word: Letters to split into columns.
        max_entry: Largest allowed entry, or None for no upper bound.
        min_entry_exclusive: Every entry must be strictly greater than this.

    Returns:
        Tableaux sorted by shape; no two share a shape.
    """
    return list(_parse(tuple(word), max_entry, min_entry_exclusive))


def parse_skew_column_word(word: Sequence[int], bound: int) -> List[Tableau]:
    """Skew tableaux of rotated straight shapes with column word *word* and entries at most *bound*."""

    if any(letter < 1 or letter > bound for letter in word):
        return []
    complement = tuple(bound + 1 - letter for letter in reversed(word))
    return [tableau.rotated(bound) for tableau in _parse(complement, bound, 0)]


def enumerate_ssyt(shape: Partition, max_entry: int) -> List[Tableau]:
    """Every semistandard filling of *shape* with entries in 1..max_entry, row by row."""

    if max_entry < 1:
        raise PartitionError(f"max_entry must be positive, got {max_entry}")
    results: List[Tableau] = []

    def fill_row(filled: List[Tuple[int, ...]], row: int, current: List[int]) -> None:
        if row == len(shape):
            results.append(Tableau.straight(filled))
            return
        column = len(current)
        if column == shape[row]:
            fill_row(filled + [tuple(current)], row + 1, [])
            return
        low = current[-1] if current else 1
        if row > 0:
            low = max(low, filled[row - 1][column] + 1)
        for value in range(low, max_entry + 1):
            fill_row(filled, row, current + [value])

    fill_row([], 0, [])
    return results


def schur_vanishes(alpha: Partition, rows_available: Optional[int], cols_available: Optional[int]) -> bool:
    """Hook condition: s_alpha(X/Y) is zero iff alpha holds a (|X|+1) x (|Y|+1) box.

    None stands for an unbounded alphabet.
    """
    if rows_available is None or cols_available is None:
        return False
    return alpha[rows_available] > cols_available
