"""
Oracle-equivalence suites.

Every tableau-counting table is compared with the divided-difference Schubert
polynomials and with the other ways of computing the same table. A suite is a
list of named checks; each check is a stream of labelled cases.
"""

from __future__ import annotations

import itertools
import logging
import time
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from algebra.identities import (
    cauchy_expansion,
    same_expected,
    same_specialization,
    split_lower_expansion,
    split_upper_expansion,
)
from algebra.polyring import Variable
from algebra.schubert import (
    double_schubert,
    evaluate_schur_expansion,
    expected_codimension,
    quiver_rank_conditions,
    single_schubert,
    stanley_schur_expansion,
    stanley_truncation,
    universal_double,
)
from combinatorics.permcore import Permutation, all_permutations

from .giambelli import giambelli_I, giambelli_II
from .placement import expand_placed, padding_assignment, place_coefficients
from .quiver import (
    degrees_conserved,
    expand_universal,
    quiver_coefficients,
    quiver_coefficients_skew,
    restrict,
    single_position_expected,
    split_convolution,
    stanley_product,
    tableau_sequence_table,
    quiver_windows,
)
from .serialization import CheckModel, VerifyReportModel
from .splitting import monomial_coefficient, split_double_schubert, split_single

Case = Tuple[str, Callable[[], bool]]
CaseFactory = Callable[[], Iterator[Case]]

DEFAULT_SEED = 20240
S5_SAMPLE_SIZE = 10
IDENTITY_SAMPLE_SIZE = 6
MAX_REPORTED_FAILURES = 20


def compatible_sequences(w: Permutation, values: Sequence[int]) -> List[Tuple[int, ...]]:
    """Nonempty increasing subsequences of *values* that contain every descent of *w*."""
    needed = set(w.descents())
    found = []
    for size in range(1, len(values) + 1):
        for subset in itertools.combinations(values, size):
            if needed <= set(subset):
                found.append(subset)
    return found


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def sample_permutations(size: int, count: int, seed: int) -> List[Permutation]:
    population = all_permutations(size)
    rng = np.random.default_rng(seed)
    picks = rng.choice(len(population), size=min(count, len(population)), replace=False)
    return [population[int(index)] for index in sorted(picks)]


def run_check(name: str, factory: CaseFactory, *, logger: Optional[logging.Logger] = None) -> CheckModel:
    """Evaluate every case of one check; exceptions count as failures."""

    start = time.perf_counter()
    cases = 0
    failures: List[str] = []
    for label, predicate in factory():
        cases += 1
        try:
            ok = predicate()
        except Exception as exc:  # noqa: BLE001
            ok = False
            label = f"{label}: {type(exc).__name__}: {exc}"
        if not ok:
            failures.append(label)
            if logger:
                logger.error("Check %s failed on %s", name, label)
    seconds = time.perf_counter() - start
    if logger:
        logger.info("⏱️  %s: %d cases, %d failures, %.3f seconds", name, cases, len(failures), seconds)
    return CheckModel(
        name=name,
        cases=cases,
        failures=failures[:MAX_REPORTED_FAILURES],
        passed=not failures,
        seconds=seconds,
    )


def table_checks(perms: Sequence[Permutation], n: int, *, workers: int = 1) -> List[Tuple[str, CaseFactory]]:
    """Equalities among the quiver tables and the universal double Schubert polynomial."""

    def universal() -> Iterator[Case]:
        for w in perms:
            yield str(w), lambda w=w: expand_universal(quiver_coefficients(w, n, workers=workers), n) == universal_double(w)

    def skew() -> Iterator[Case]:
        for w in perms:
            yield str(w), lambda w=w: quiver_coefficients_skew(w, n, workers=workers) == quiver_coefficients(w, n)

    def product() -> Iterator[Case]:
        for w in perms:
            yield str(w), lambda w=w: stanley_product(w, n) == quiver_coefficients(w, n)

    def strategies() -> Iterator[Case]:
        windows = quiver_windows(n)
        for w in perms:
            yield str(w), lambda w=w: tableau_sequence_table(
                w, windows, strategy="baseline", workers=workers
            ) == tableau_sequence_table(w, windows, strategy="dp")

    def degrees() -> Iterator[Case]:
        for w in perms:
            yield str(w), lambda w=w: degrees_conserved(quiver_coefficients(w, n), w)

    return [
        ("quiver-vs-universal", universal),
        ("skew-vs-straight", skew),
        ("stanley-product", product),
        ("dp-vs-baseline", strategies),
        ("degree-conservation", degrees),
    ]


def structure_checks(perms: Sequence[Permutation], n: int) -> List[Tuple[str, CaseFactory]]:
    """Placement, restriction identities and rank conditions on the quiver tables."""

    def placement() -> Iterator[Case]:
        values = list(range(1, n + 1))
        for w in perms:
            table = quiver_coefficients(w, n)
            target = universal_double(w)
            for a_seq in compatible_sequences(w, values):
                for b_seq in compatible_sequences(w.inverse(), values):
                    yield f"{w} a={a_seq} b={b_seq}", lambda w=w, a=a_seq, b=b_seq, table=table, target=target: (
                        expand_placed(place_coefficients(table, n, a, b, w=w), a, b)
                        == target.substitute(padding_assignment(n, a, b))
                    )

    def convolution() -> Iterator[Case]:
        for w in perms:
            for i in range(2, 2 * n):
                yield f"{w} i={i}", lambda w=w, i=i: split_convolution(w, n, i) == quiver_coefficients(w, n)

    def single_position() -> Iterator[Case]:
        for w in perms:
            for i in range(1, 2 * n):
                yield f"{w} i={i}", lambda w=w, i=i: restrict(quiver_coefficients(w, n), i, i) == single_position_expected(
                    w, n, i
                )

    def codimension() -> Iterator[Case]:
        for w in perms:
            yield str(w), lambda w=w: expected_codimension(quiver_rank_conditions(w, n)) == w.length()

    return [
        ("placement", placement),
        ("split-convolution", convolution),
        ("single-position", single_position),
        ("rank-codimension", codimension),
    ]


def splitting_checks(perms: Sequence[Permutation], size: int) -> List[Tuple[str, CaseFactory]]:
    """Splitting formulas, monomial coefficients and Giambelli expressions against the oracle."""

    def split_double() -> Iterator[Case]:
        for w in perms:
            target = double_schubert(w)
            for a_seq in compatible_sequences(w, list(range(1, size))):
                for b_seq in compatible_sequences(w.inverse(), list(range(0, size))):
                    yield f"{w} a={a_seq} b={b_seq}", lambda w=w, a=a_seq, b=b_seq, target=target: (
                        split_double_schubert(w, a, b).polynomial == target
                    )

    def split_single_case() -> Iterator[Case]:
        for w in perms:
            target = single_schubert(w)
            for a_seq in compatible_sequences(w, list(range(1, size))):
                yield f"{w} a={a_seq}", lambda w=w, a=a_seq, target=target: split_single(w, a).polynomial == target

    def monomials() -> Iterator[Case]:
        rank = max(size - 1, 1)
        for w in perms:
            polynomial = double_schubert(w, max(size, 1))
            for exponents in _compositions(w.length(), 2 * rank):
                u, v = exponents[:rank], exponents[rank:]
                powers = {Variable("x", i): e for i, e in enumerate(u, 1) if e}
                powers.update({Variable("y", i): e for i, e in enumerate(v, 1) if e})
                yield f"{w} x^{u} y^{v}", lambda w=w, u=u, v=v, powers=powers, polynomial=polynomial: (
                    monomial_coefficient(w, u, v) == polynomial.coefficient(powers)
                )

    def giambelli() -> Iterator[Case]:
        if size < 2:
            return
        for w in perms:
            target = single_schubert(w)
            for a_seq in compatible_sequences(w, list(range(1, size))):
                yield f"{w} a={a_seq} I", lambda w=w, a=a_seq, target=target: giambelli_I(w, a, size).expand() == target
                yield f"{w} a={a_seq} II", lambda w=w, a=a_seq, target=target: (
                    giambelli_II(w, a, size).expand() == target
                )

    def chain() -> Iterator[Case]:
        for w in perms:
            yield str(w), lambda w=w: double_schubert(w, size, "smallest") == double_schubert(w, size, "largest")

    return [
        ("split-double", split_double),
        ("split-single", split_single_case),
        ("monomial-coefficients", monomials),
        ("giambelli", giambelli),
        ("chain-independence", chain),
    ]


def identity_checks(perms: Sequence[Permutation], size: int) -> List[Tuple[str, CaseFactory]]:
    """Identities among universal Schubert polynomials and stability of Stanley functions."""

    def specialization() -> Iterator[Case]:
        for w in perms:
            for m in range(0, size):
                yield f"{w} m={m}", lambda w=w, m=m: same_specialization(w, m) == same_expected(w, m)

    def cauchy() -> Iterator[Case]:
        for w in perms:
            yield str(w), lambda w=w: cauchy_expansion(w) == universal_double(w)

    def splits() -> Iterator[Case]:
        for w in perms:
            target = universal_double(w)
            for r in range(1, size):
                yield f"{w} upper r={r}", lambda w=w, r=r, target=target: split_upper_expansion(w, r) == target
                yield f"{w} lower r={r}", lambda w=w, r=r, target=target: split_lower_expansion(w, r) == target

    return [
        ("same-specialization", specialization),
        ("cauchy", cauchy),
        ("universal-splits", splits),
    ]


def stability_checks(perms: Sequence[Permutation], max_vars: int) -> List[Tuple[str, CaseFactory]]:
    def stability() -> Iterator[Case]:
        for w in perms:
            expansion = stanley_schur_expansion(w)
            for k in range(1, max_vars + 1):
                yield f"{w} k={k}", lambda w=w, k=k, expansion=expansion: (
                    stanley_truncation(w, k, k)
                    == stanley_truncation(w, k, k + 1)
                    == evaluate_schur_expansion(expansion, k)
                )

    def positivity() -> Iterator[Case]:
        for w in perms:
            yield str(w), lambda w=w: all(
                coeff > 0 and alpha.size == w.length() for alpha, coeff in stanley_schur_expansion(w).items()
            )

    return [("stanley-stability", stability), ("stanley-positivity", positivity)]


def suite_checks(suite: str, seed: int, *, workers: int = 1) -> List[Tuple[str, CaseFactory]]:
    if suite == "s3":
        perms = all_permutations(3)
        return (
            table_checks(perms, 2, workers=workers)
            + structure_checks(perms, 2)
            + splitting_checks(perms, 3)
            + identity_checks(perms, 3)
            + stability_checks(perms, 2)
        )
    if suite == "s4":
        perms = all_permutations(4)
        return (
            table_checks(perms, 3, workers=workers)
            + structure_checks(perms, 3)
            + splitting_checks(perms, 4)
            + identity_checks(sample_permutations(4, IDENTITY_SAMPLE_SIZE, seed), 4)
            + stability_checks(perms, 3)
        )
    if suite == "s5-sample":
        return table_checks(sample_permutations(5, S5_SAMPLE_SIZE, seed), 4, workers=workers)
    raise ValueError(f"Unknown suite {suite!r}")


def run_suite(
    suite: str,
    seed: Optional[int] = None,
    *,
    workers: int = 1,
    logger: Optional[logging.Logger] = None,
) -> VerifyReportModel:
    """Run every check of *suite* and collect the report."""

    seed = DEFAULT_SEED if seed is None else seed
    if logger:
        logger.info("Running suite %s (seed=%d, workers=%d)", suite, seed, workers)
    checks = [run_check(name, factory, logger=logger) for name, factory in suite_checks(suite, seed, workers=workers)]
    return VerifyReportModel(suite=suite, seed=seed, passed=all(check.passed for check in checks), checks=checks)


def failing_cases(report: VerifyReportModel) -> Iterable[str]:
    for check in report.checks:
        for label in check.failures:
            yield f"{check.name}: {label}"
