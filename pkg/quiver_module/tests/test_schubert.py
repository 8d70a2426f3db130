import pytest

from algebra.polyring import ONE, chern, elementary, x, x_block, y, y_block
from algebra.schubert import (
    double_schubert,
    e_expansion,
    evaluate_schur_expansion,
    expected_codimension,
    quiver_rank_conditions,
    single_schubert,
    stanley_schur_expansion,
    stanley_truncation,
    tableau_counts,
    universal_double,
    universal_single,
)
from combinatorics.permcore import Permutation, PermutationError, all_permutations
from combinatorics.shapes import Partition


def test_small_double_schubert_polynomials(perm):
    assert double_schubert(Permutation.identity()) == ONE
    assert double_schubert(perm("213")) == x(1) - y(1)
    assert double_schubert(perm("132")) == x(1) + x(2) - y(1) - y(2)
    assert double_schubert(perm("312")) == (x(1) - y(1)) * (x(1) - y(2))
    assert double_schubert(perm("321")) == (x(1) - y(1)) * (x(1) - y(2)) * (x(2) - y(1))


def test_double_schubert_is_stable_and_chain_independent():
    for w in all_permutations(3):
        assert double_schubert(w, 4) == double_schubert(w)
        assert double_schubert(w, 3, "largest") == double_schubert(w, 3, "smallest")


def test_double_schubert_rejects_bad_arguments(perm):
    with pytest.raises(PermutationError):
        double_schubert(perm("4123"), 3)
    with pytest.raises(ValueError):
        double_schubert(perm("312"), ascent="middle")


def test_single_schubert_of_32541(perm):
    expected = (
        x(1) ** 3 * x(2) * x(3) * x(4)
        + x(1) ** 2 * x(2) ** 2 * x(3) * x(4)
        + x(1) ** 2 * x(2) * x(3) ** 2 * x(4)
    )
    assert single_schubert(perm("32541")) == expected


def test_single_schubert_is_the_y_free_part():
    for w in all_permutations(4):
        assert single_schubert(w) == double_schubert(w).specialize_zero({"y"})


def test_e_expansion_of_312(perm):
    assert e_expansion(perm("312")) == {(1, 1): 1, (0, 2): -1}
    assert e_expansion(Permutation.identity()) == {(0,): 1}
    with pytest.raises(PermutationError):
        e_expansion(perm("4123"), 2)


def test_universal_polynomials_of_312(perm):
    c, d = (lambda i, j: chern("c", i, j)), (lambda i, j: chern("d", i, j))
    assert universal_single(perm("312")) == c(1, 1) * c(1, 2) - c(2, 2)
    double = universal_double(perm("312"))
    assert double == c(1, 1) * c(1, 2) - c(1, 1) * d(1, 2) - c(2, 2) + d(2, 2)
    assert str(double) == "c_1(1)*c_1(2) - c_1(1)*d_1(2) - c_2(2) + d_2(2)"


def test_universal_double_recovers_double_schubert():
    # c_i(j) -> e_i(x_1..x_j), d_i(j) -> e_i(y_1..y_j)
    for w in all_permutations(3):
        polynomial = universal_double(w)
        assignment = {}
        for var in polynomial.variables():
            block = x_block(1, var.column) if var.family == "c" else y_block(1, var.column)
            assignment[var] = elementary(var.index, block)
        assert polynomial.substitute(assignment) == double_schubert(w), w


def test_stanley_schur_expansions(perm):
    assert stanley_schur_expansion(perm("321")) == {Partition([2, 1]): 1}
    assert stanley_schur_expansion(perm("312")) == {Partition([2]): 1}
    assert stanley_schur_expansion(perm("231")) == {Partition([1, 1]): 1}
    assert stanley_schur_expansion(Permutation.identity()) == {Partition(): 1}


def test_tableau_counts_respect_bounds(perm):
    assert tableau_counts(perm("312"), max_entry=1) == {}
    assert tableau_counts(perm("312"), max_entry=2) == {Partition([2]): 1}
    assert tableau_counts(perm("312"), min_entry_exclusive=1) == {}


def test_stanley_truncation_is_stable(perm):
    w = perm("312")
    assert stanley_truncation(w, 2, 2) == stanley_truncation(w, 2, 3)
    assert stanley_truncation(w, 2, 2) == evaluate_schur_expansion(stanley_schur_expansion(w), 2)
    with pytest.raises(ValueError):
        stanley_truncation(w, 3, 2)


def test_stanley_coefficients_are_positive_with_matching_degree():
    for w in all_permutations(4):
        for alpha, coeff in stanley_schur_expansion(w).items():
            assert coeff > 0
            assert alpha.size == w.length()


def test_rank_conditions_match_length(perm):
    conditions = quiver_rank_conditions(perm("312"), 2)
    assert expected_codimension(conditions) == 2
    for w in all_permutations(4):
        assert expected_codimension(quiver_rank_conditions(w, 3)) == w.length()
    with pytest.raises(PermutationError):
        quiver_rank_conditions(perm("4123"), 2)
