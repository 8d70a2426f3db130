import itertools

import pytest

from algebra.polyring import x
from algebra.schubert import single_schubert
from combinatorics.permcore import Permutation, all_permutations
from combinatorics.shapes import EMPTY, Partition
from quiver_core.giambelli import (
    ClassSymbol,
    GiambelliExpression,
    GiambelliTerm,
    flag_positions,
    flag_symbols,
    giambelli,
    giambelli_I,
    giambelli_II,
    kernel_symbols,
)
from quiver_core.placement import IncompatibleSequenceError, placement_positions

P = Partition
W32541 = Permutation.parse("32541")


def compatible(w, values):
    needed = set(w.descents())
    for size in range(1, len(values) + 1):
        for subset in itertools.combinations(values, size):
            if needed <= set(subset):
                yield subset


def test_symbols_for_a_three_step_flag():
    assert [str(symbol) for symbol in kernel_symbols((1, 3, 4))] == ["Q_1", "Q_2", "Q_3"]
    assert [symbol.upper for symbol in kernel_symbols((1, 3, 4))] == [(1, 1), (2, 3), (4, 4)]
    assert [str(symbol) for symbol in flag_symbols((1, 3, 4))] == ["F_4", "F_3-F_4", "F_1-F_3"]
    assert flag_positions(5, (1, 3, 4)) == (5, 7, 8)


def test_kernel_form_of_32541():
    expression = giambelli_I(W32541, (1, 3, 4), 5)
    assert expression.shape_table() == {
        (P([2]), P([2, 1]), P([1])): 1,
        (P([3]), P([1, 1]), P([1])): 1,
    }
    assert set(str(expression).split(" + ")) == {
        "s_{2}(Q_1)*s_{2,1}(Q_2)*s_{1}(Q_3)",
        "s_{3}(Q_1)*s_{1,1}(Q_2)*s_{1}(Q_3)",
    }
    assert expression.expand() == single_schubert(W32541)


def test_flag_form_of_32541():
    expression = giambelli_II(W32541, (1, 3, 4), 5)
    assert expression.form == "II"
    assert all(coeff > 0 for coeff in expression.shape_table().values())
    assert expression.expand() == single_schubert(W32541)


def test_identity_renders_as_one():
    identity = Permutation.identity()
    assert str(giambelli_I(identity, (1,), 2)) == "1"
    assert str(giambelli_II(identity, (1,), 2)) == "1"
    assert giambelli(identity, (1,), 2, "II").shape_table() == {(EMPTY,): 1}


def test_grassmannian_forms_agree():
    w = Permutation.parse("1342")
    kernel = giambelli(w, (3,), 4, "I")
    flag = giambelli(w, (3,), 4, "II")
    assert kernel.shape_table() == flag.shape_table() == {(P([1, 1]),): 1}
    assert kernel.expand() == flag.expand() == x(1) * x(2) + x(1) * x(3) + x(2) * x(3)


@pytest.mark.parametrize("w", all_permutations(4), ids=str)
def test_both_forms_expand_to_the_single_polynomial(w):
    target = single_schubert(w)
    for a_seq in compatible(w, (1, 2, 3)):
        assert giambelli_I(w, a_seq, 4).expand() == target, a_seq
        assert giambelli_II(w, a_seq, 4).expand() == target, a_seq


def test_flag_must_fit_below_n():
    w = Permutation.parse("1342")
    with pytest.raises(IncompatibleSequenceError, match="below n"):
        giambelli_I(w, (3,), 3)
    with pytest.raises(IncompatibleSequenceError, match="at least 2"):
        giambelli_II(Permutation.identity(), (1,), 1)
    with pytest.raises(IncompatibleSequenceError, match="missing"):
        giambelli_I(W32541, (1, 3), 5)
    with pytest.raises(ValueError, match="form"):
        giambelli(w, (3,), 4, "III")


def test_rendering_with_coefficients():
    symbol = ClassSymbol("Q_1", (1, 2))
    identity = Permutation.identity()
    term = GiambelliTerm(2, ((symbol, P([2, 1])),))
    expression = GiambelliExpression("I", identity, (2,), 3, (symbol,), (term,))
    assert str(expression) == "2*s_{2,1}(Q_1)"
    assert str(GiambelliExpression("I", identity, (2,), 3, (symbol,), ())) == "0"


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_flag_positions_follow_the_placement_rule(n):
    for size in range(1, n):
        for a_seq in itertools.combinations(range(1, n), size):
            positions = flag_positions(n, a_seq)
            assert positions == tuple(placement_positions(n, a_seq, (n,)))
            assert positions[0] == n
            assert positions[1:] == tuple(2 * n + 1 - a_seq[k] for k in range(len(a_seq) - 1, 0, -1))
            assert len(positions) == len(flag_symbols(a_seq))
