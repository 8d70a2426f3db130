"""
Command-line entry point: parse, compute, render, cache.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence, TextIO

from algebra.polyring import ArithmeticInvariantError
from algebra.schubert import (
    double_schubert,
    evaluate_schur_expansion,
    expected_codimension,
    quiver_rank_conditions,
    single_schubert,
    stanley_schur_expansion,
    universal_double,
    universal_single,
)
from combinatorics.permcore import rank_matrix, reduced_words

from .cache import OutputCache, canonical_request
from .config import CliConfig, CliUsageError, build_parser
from .giambelli import giambelli
from .logging_utils import configure_logging
from .quiver import check_group, quiver_coefficients, quiver_coefficients_skew, stanley_product
from .serialization import (
    ExpansionModel,
    MonomialModel,
    RankConditionModel,
    RankModel,
    SchurEntryModel,
    SplitModel,
    WordsModel,
    dump,
    expansion_frame,
    giambelli_model,
    polynomial_model,
    render_frame,
    report_frame,
    table_entries,
    table_frame,
    table_model,
)
from .splitting import monomial_coefficient, split_double_schubert, split_single
from .verify import failing_cases, run_suite

GLOBAL_OPTIONS = frozenset({"command", "json", "cache_dir", "no_cache", "log_file", "log_level", "workers"})

Handler = Callable[[argparse.Namespace, CliConfig, logging.Logger], str]


def _reduced_words(args: argparse.Namespace, config: CliConfig, logger: logging.Logger) -> str:
    words = reduced_words(args.w)
    if config.json_output:
        return dump(WordsModel(w=str(args.w), length=args.w.length(), words=[list(word) for word in words]))
    return "\n".join(" ".join(map(str, word)) if word else "()" for word in words)


def _schubert(args: argparse.Namespace, config: CliConfig, logger: logging.Logger) -> str:
    compute = double_schubert if args.double else single_schubert
    polynomial = compute(args.w, args.n)
    return dump(polynomial_model(polynomial)) if config.json_output else str(polynomial)


def _universal(args: argparse.Namespace, config: CliConfig, logger: logging.Logger) -> str:
    polynomial = universal_double(args.w) if args.double else universal_single(args.w)
    return dump(polynomial_model(polynomial)) if config.json_output else str(polynomial)


def _stanley(args: argparse.Namespace, config: CliConfig, logger: logging.Logger) -> str:
    expansion = stanley_schur_expansion(args.w)
    if args.vars is not None:
        if args.vars < 0:
            raise ValueError(f"--vars must be non-negative, got {args.vars}")
        polynomial = evaluate_schur_expansion(expansion, args.vars)
        return dump(polynomial_model(polynomial)) if config.json_output else str(polynomial)
    if config.json_output:
        entries = [SchurEntryModel(partition=alpha.to_list(), coeff=coeff) for alpha, coeff in sorted(expansion.items())]
        return dump(ExpansionModel(w=str(args.w), entries=entries))
    return render_frame(expansion_frame(expansion))


def _quiver_coeffs(args: argparse.Namespace, config: CliConfig, logger: logging.Logger) -> str:
    if args.skew:
        table = quiver_coefficients_skew(args.w, args.n, workers=config.workers, logger=logger)
    elif args.stanley_product:
        table = stanley_product(args.w, args.n)
    else:
        table = quiver_coefficients(args.w, args.n, strategy=args.strategy, workers=config.workers, logger=logger)
    if config.json_output:
        return dump(table_model(args.w, table, args.n))
    return render_frame(table_frame(table))


def _split(args: argparse.Namespace, config: CliConfig, logger: logging.Logger) -> str:
    if args.b is None:
        expansion = split_single(args.w, args.a)
    else:
        expansion = split_double_schubert(args.w, args.a, args.b)
    if config.json_output:
        return dump(
            SplitModel(
                w=str(args.w),
                a=list(args.a),
                b=None if args.b is None else list(args.b),
                entries=table_entries(expansion.table),
                polynomial=polynomial_model(expansion.polynomial),
            )
        )
    return f"{render_frame(table_frame(expansion.table))}\n{expansion.polynomial}"


def _monomial(args: argparse.Namespace, config: CliConfig, logger: logging.Logger) -> str:
    coeff = monomial_coefficient(args.w, args.x, args.y)
    if config.json_output:
        return dump(MonomialModel(w=str(args.w), x=list(args.x), y=list(args.y), coeff=coeff))
    return str(coeff)


def _giambelli(args: argparse.Namespace, config: CliConfig, logger: logging.Logger) -> str:
    expression = giambelli(args.w, args.a, args.n, args.form)
    return dump(giambelli_model(expression)) if config.json_output else str(expression)


def _rank(args: argparse.Namespace, config: CliConfig, logger: logging.Logger) -> str:
    check_group(args.w, args.n)
    matrix = rank_matrix(args.w, args.n + 1)
    conditions = quiver_rank_conditions(args.w, args.n)
    codimension = expected_codimension(conditions)
    if config.json_output:
        return dump(
            RankModel(
                w=str(args.w),
                n=args.n,
                length=args.w.length(),
                rank_matrix=matrix,
                conditions=[RankConditionModel(i=i, j=j, rank=r) for (i, j), r in sorted(conditions.items())],
                expected_codimension=codimension,
            )
        )
    lines = ["rank matrix:"]
    lines.extend(" ".join(str(value) for value in row) for row in matrix)
    lines.append("quiver rank conditions:")
    lines.extend(f"r[{i},{j}] = {r}" for (i, j), r in sorted(conditions.items()))
    lines.append(f"expected codimension: {codimension} (length {args.w.length()})")
    return "\n".join(lines)


HANDLERS: Dict[str, Handler] = {
    "reduced-words": _reduced_words,
    "schubert": _schubert,
    "universal": _universal,
    "stanley": _stanley,
    "quiver-coeffs": _quiver_coeffs,
    "split": _split,
    "monomial-coeff": _monomial,
    "giambelli": _giambelli,
    "rank": _rank,
}


def _verify(args: argparse.Namespace, config: CliConfig, logger: logging.Logger, stdout: TextIO) -> int:
    report = run_suite(args.suite, args.seed, workers=config.workers, logger=logger)
    frame = report_frame(report)
    if config.report is not None:
        config.report.parent.mkdir(parents=True, exist_ok=True)
        frame.write_csv(config.report)
        logger.info("Wrote verification report to %s", config.report)
    if config.json_output:
        print(dump(report), file=stdout)
    else:
        print(render_frame(frame), file=stdout)
        for line in failing_cases(report):
            print(f"FAILED {line}", file=stdout)
        status = "passed" if report.passed else "FAILED"
        print(f"suite {report.suite} (seed {report.seed}): {status}", file=stdout)
    return 0 if report.passed else 1


def _cached_output(args: argparse.Namespace, config: CliConfig, logger: logging.Logger) -> str:
    cache = OutputCache(config.cache_dir)
    request = canonical_request(
        args.command,
        {name: value for name, value in vars(args).items() if name not in GLOBAL_OPTIONS},
        config.json_output,
    )
    output = cache.load(request)
    if output is None:
        output = HANDLERS[args.command](args, config, logger)
        cache.store(request, output)
    return output


def run(
    argv: Optional[Sequence[str]] = None,
    *,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    base_dir: Optional[Path] = None,
) -> int:
    """Execute one command; returns 0 on success, 1 on a failed verification, 2 on bad input."""

    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        config = CliConfig.from_args(args, base_dir or Path.cwd())
    except SystemExit as exc:
        return int(exc.code or 0)
    except (CliUsageError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2

    logger = configure_logging(config.log_file, config.log_level)
    start = time.perf_counter()
    try:
        if args.command == "verify":
            return _verify(args, config, logger, stdout)
        print(_cached_output(args, config, logger), file=stdout)
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except ArithmeticInvariantError as exc:
        logger.exception("Internal invariant violated: %s", exc)
        print(f"error: internal invariant violated: {exc}", file=stderr)
        return 1
    finally:
        logger.info("⏱️  %s took %.3f seconds", args.command, time.perf_counter() - start)
    return 0


def main() -> None:
    sys.exit(run())
