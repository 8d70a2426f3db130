import pytest
from hypothesis import given, strategies as st

from combinatorics.shapes import (
    EMPTY,
    Partition,
    PartitionError,
    SkewShape,
    Tableau,
    column_word,
    conjugate,
    enumerate_ssyt,
    parse_column_word,
    parse_skew_column_word,
    rotate180,
    schur_vanishes,
)

partitions = st.lists(st.integers(min_value=1, max_value=5), max_size=5).map(
    lambda parts: Partition(sorted(parts, reverse=True))
)


def test_partition_normalises_and_validates():
    assert Partition([3, 1, 0, 0]) == Partition([3, 1])
    assert not Partition([0])
    assert Partition([2, 1])[5] == 0
    with pytest.raises(PartitionError):
        Partition([1, 2])
    with pytest.raises(PartitionError):
        Partition([2, -1])


def test_partition_rendering():
    assert str(Partition([2, 1])) == "(2,1)"
    assert str(EMPTY) == "∅"


def test_conjugate():
    assert conjugate(Partition([3, 1])) == Partition([2, 1, 1])
    assert conjugate(EMPTY) == EMPTY


@given(partitions)
def test_conjugate_is_an_involution(alpha):
    assert conjugate(conjugate(alpha)) == alpha
    assert conjugate(alpha).size == alpha.size


def test_rotate180_of_a_hook():
    # conjugate of (2,1) is (2,1); rotated inside its 2x2 box it becomes (2,2)/(1)
    assert rotate180(Partition([2, 1])) == SkewShape(Partition([2, 2]), Partition([1]))
    assert rotate180(EMPTY) == SkewShape(EMPTY, EMPTY)


def test_skew_shape_rejects_non_containment():
    with pytest.raises(PartitionError):
        SkewShape(Partition([1]), Partition([2]))


def test_column_word_reads_columns_bottom_to_top():
    tableau = Tableau.straight([[1, 2], [3]])
    assert column_word(tableau) == (3, 1, 2)
    assert tableau.is_semistandard()


def test_parse_column_word_finds_every_tableau():
    shapes = [tableau.outer for tableau in parse_column_word((2, 1))]
    assert shapes == [Partition([1, 1])]
    shapes = [tableau.outer for tableau in parse_column_word((1, 2))]
    assert shapes == [Partition([2])]
    assert parse_column_word(()) == [Tableau.straight([])]


def test_parse_column_word_respects_entry_window():
    assert parse_column_word((2, 1), max_entry=1) == []
    assert parse_column_word((3, 2), min_entry_exclusive=2) == []
    assert len(parse_column_word((3, 2), max_entry=3, min_entry_exclusive=1)) == 1


def test_parsed_tableaux_are_semistandard_and_reread():
    word = (2, 1, 3, 2)
    for tableau in parse_column_word(word):
        assert tableau.is_semistandard()
        assert column_word(tableau) == word


def test_rotation_reverses_and_complements_the_column_word():
    tableau = Tableau.straight([[1, 1], [2]])
    rotated = tableau.rotated(3)
    assert rotated.outer == Partition([2, 2])
    assert rotated.inner == Partition([1])
    assert rotated.is_semistandard()
    assert column_word(rotated) == tuple(4 - letter for letter in reversed(column_word(tableau)))
    assert rotated.rotated(3) == tableau


def test_rotation_rejects_entries_beyond_the_bound():
    with pytest.raises(PartitionError):
        Tableau.straight([[1, 4]]).rotated(3)


def test_parse_skew_column_word():
    skew = parse_skew_column_word((3, 1), 3)
    assert skew
    for tableau in skew:
        assert column_word(tableau) == (3, 1)
        assert tableau.is_semistandard()
    assert parse_skew_column_word((4,), 3) == []


def test_enumerate_ssyt_counts():
    # s_(2,1)(x1, x2, x3) has 8 terms, s_(1,1)(x1, x2) has one
    assert len(enumerate_ssyt(Partition([2, 1]), 3)) == 8
    assert len(enumerate_ssyt(Partition([1, 1]), 2)) == 1
    assert all(tableau.is_semistandard() for tableau in enumerate_ssyt(Partition([2, 2]), 3))


def test_schur_vanishes_hook_condition():
    assert schur_vanishes(Partition([1, 1]), 1, 0)
    assert not schur_vanishes(Partition([1, 1]), 1, 1)
    assert not schur_vanishes(Partition([3]), 1, 0)
    assert not schur_vanishes(Partition([2, 2, 2]), None, 0)


@given(st.lists(st.integers(min_value=1, max_value=4), max_size=6))
def test_every_parse_rereads_its_word(word):
    shapes = []
    for tableau in parse_column_word(word):
        assert column_word(tableau) == tuple(word)
        assert tableau.is_semistandard()
        shapes.append(tableau.outer)
    assert len(shapes) == len(set(shapes))


def _partitions(total, largest=None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


SMALL_PARTITIONS = [Partition(parts) for size in range(1, 7) for parts in _partitions(size)]


def _hook_content_count(alpha, max_entry):
    numerator, denominator = 1, 1
    transposed = conjugate(alpha)
    for row, length in enumerate(alpha):
        for column in range(length):
            numerator *= max_entry + column - row
            denominator *= (length - column - 1) + (transposed[column] - row - 1) + 1
    return numerator // denominator


@pytest.mark.parametrize("alpha", SMALL_PARTITIONS, ids=str)
@pytest.mark.parametrize("max_entry", [1, 2, 3, 4])
def test_enumerated_tableaux_survive_the_column_word_round_trip(alpha, max_entry):
    tableaux = enumerate_ssyt(alpha, max_entry)
    assert len(set(tableaux)) == len(tableaux) == _hook_content_count(alpha, max_entry)
    for tableau in tableaux:
        assert tableau.outer == alpha and tableau.is_straight
        assert tableau.is_semistandard()
        assert all(1 <= entry <= max_entry for entry in tableau.entries())
        assert tableau in parse_column_word(column_word(tableau), max_entry=max_entry)


def test_small_partition_catalogue():
    assert len(SMALL_PARTITIONS) == 1 + 2 + 3 + 5 + 7 + 11


@pytest.mark.parametrize("alpha", SMALL_PARTITIONS, ids=str)
def test_rotate180_keeps_every_cell(alpha):
    rotated = rotate180(alpha)
    assert rotated.size == alpha.size
    assert len(set(rotated.outer)) == 1


@given(partitions)
def test_rotate180_keeps_every_cell_of_random_shapes(alpha):
    rotated = rotate180(alpha)
    assert rotated.size == alpha.size
    assert rotated.outer.size == len(alpha) * (alpha[0] if alpha else 0)
