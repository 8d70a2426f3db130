import itertools

import pytest

from algebra.polyring import ONE, Variable, x, y
from algebra.schubert import double_schubert, single_schubert
from combinatorics.permcore import Permutation, all_permutations
from combinatorics.shapes import EMPTY, Partition
from quiver_core.placement import IncompatibleSequenceError
from quiver_core.splitting import (
    double_split_positions,
    monomial_coefficient,
    monomial_exponents,
    single_split_positions,
    split_double_schubert,
    split_single,
)

P = Partition


def compatible(w, values):
    needed = set(w.descents())
    for size in range(1, len(values) + 1):
        for subset in itertools.combinations(values, size):
            if needed <= set(subset):
                yield subset


def test_split_positions_for_full_sequences():
    positions = double_split_positions((1, 2), (1, 2))
    assert [position.floor for position in positions] == [1, 0, 1]
    assert [len(position.x_vars) for position in positions] == [0, 1, 1]
    assert [len(position.y_vars) for position in positions] == [1, 1, 0]
    assert [position.floor for position in single_split_positions((1, 3, 4))] == [0, 1, 3]


def test_worked_example_321():
    w = Permutation.parse("321")
    expansion = split_double_schubert(w, (1, 2), (1, 2))
    assert expansion.table == {
        (EMPTY, P([2]), P([1])): 1,
        (EMPTY, P([2, 1]), EMPTY): 1,
        (P([1]), P([1]), P([1])): 1,
        (P([1]), P([1, 1]), EMPTY): 1,
    }
    assert sum(expansion.table.values()) == 4
    assert expansion.polynomial == (x(1) - y(1)) * (x(1) - y(2)) * (x(2) - y(1))


def test_worked_example_32541():
    w = Permutation.parse("32541")
    expansion = split_single(w, (1, 3, 4))
    assert expansion.table == {
        (P([2]), P([2, 1]), P([1])): 1,
        (P([3]), P([1, 1]), P([1])): 1,
    }
    expected = (
        x(1) ** 3 * x(2) * x(3) * x(4)
        + x(1) ** 2 * x(2) ** 2 * x(3) * x(4)
        + x(1) ** 2 * x(2) * x(3) ** 2 * x(4)
    )
    assert expansion.polynomial == expected


def test_identity_splits_trivially():
    expansion = split_double_schubert(Permutation.identity(), (1,), (0,))
    assert expansion.table == {(EMPTY,): 1}
    assert expansion.polynomial == ONE
    assert split_single(Permutation.identity(), (2,)).polynomial == ONE


def test_vanishing_terms_are_kept_on_request():
    w = Permutation.parse("32541")
    kept = split_single(w, (1, 3, 4), keep_vanishing=True)
    filtered = split_single(w, (1, 3, 4))
    assert set(filtered.table) <= set(kept.table)
    assert len(kept.table) > len(filtered.table)
    assert kept.polynomial == filtered.polynomial


def test_incompatible_sequences_are_rejected():
    w = Permutation.parse("321")
    with pytest.raises(IncompatibleSequenceError):
        split_double_schubert(w, (1,), (1, 2))
    with pytest.raises(IncompatibleSequenceError):
        split_double_schubert(w, (1, 2), (2,))
    with pytest.raises(IncompatibleSequenceError):
        split_double_schubert(w, (0, 1, 2), (1, 2))
    with pytest.raises(IncompatibleSequenceError):
        split_single(Permutation.parse("32541"), (1, 3))


@pytest.mark.parametrize("w", all_permutations(3), ids=str)
def test_double_splits_match_divided_differences_in_s3(w):
    target = double_schubert(w)
    for a_seq in compatible(w, (1, 2)):
        for b_seq in compatible(w.inverse(), (0, 1, 2)):
            assert split_double_schubert(w, a_seq, b_seq).polynomial == target, (a_seq, b_seq)


@pytest.mark.parametrize("w", all_permutations(4), ids=str)
def test_splits_match_divided_differences_in_s4(w):
    double = double_schubert(w)
    for a_seq in compatible(w, (1, 2, 3)):
        assert split_single(w, a_seq).polynomial == single_schubert(w)
        for b_seq in compatible(w.inverse(), (0, 1, 2, 3)):
            expansion = split_double_schubert(w, a_seq, b_seq)
            assert expansion.polynomial == double, (a_seq, b_seq)
            positions = double_split_positions(a_seq, b_seq)
            for key in expansion.table:
                for alpha, position in zip(key, positions):
                    if not position.x_vars:
                        assert alpha[0] <= len(position.y_vars)
                    if not position.y_vars:
                        assert len(alpha) <= len(position.x_vars)


def test_monomial_coefficient_examples():
    assert monomial_coefficient(Permutation.parse("321"), (2, 1)) == 1
    assert monomial_coefficient(Permutation.parse("213"), (), (1,)) == -1
    assert monomial_coefficient(Permutation.parse("213"), (1,)) == 1
    assert monomial_coefficient(Permutation.parse("321"), (1, 1)) == 0
    assert monomial_coefficient(Permutation.identity(), ()) == 1
    with pytest.raises(ValueError):
        monomial_coefficient(Permutation.parse("213"), (-1, 2))


def _compositions(total, parts):
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        bounds = (-1,) + cuts + (total + parts - 1,)
        yield tuple(bounds[k + 1] - bounds[k] - 1 for k in range(parts))


@pytest.mark.parametrize("w", all_permutations(4), ids=str)
def test_monomial_coefficients_match_the_double_polynomial(w):
    polynomial = double_schubert(w, 4)
    for exponents in _compositions(w.length(), 6):
        u, v = exponents[:3], exponents[3:]
        powers = {Variable("x", i): e for i, e in enumerate(u, 1)}
        powers.update({Variable("y", i): e for i, e in enumerate(v, 1)})
        assert monomial_coefficient(w, u, v) == polynomial.coefficient(powers), (u, v)


def test_monomial_exponents_split_x_and_y():
    rows = monomial_exponents(double_schubert(Permutation.parse("213")), 3)
    assert rows == [((1, 0), (0, 0), 1), ((0, 0), (1, 0), -1)]
