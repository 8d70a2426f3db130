"""
Command-line parsing and runtime configuration.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
from pathlib import Path
from typing import Optional

from combinatorics.permcore import Permutation
from utils.common import _truthy, parse_int_list

from .quiver import STRATEGIES

SUITES = ("s3", "s4", "s5-sample")


class CliUsageError(ValueError):
    """Raised instead of exiting when the command line cannot be parsed."""


class QuiverArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliUsageError(message)


def permutation(text: str) -> Permutation:
    return Permutation.parse(text)


def int_list(text: str):
    values = parse_int_list(text)
    if not values:
        raise ValueError(f"Expected a comma-separated list of integers, got {text!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    """Construct and return the CLI argument parser."""
    parser = QuiverArgumentParser(
        prog="quiver",
        description="Schubert polynomials, Stanley functions and quiver coefficients of permutations.",
    )
    parser.add_argument("--json", action="store_true", help="Emit JSON documents instead of text.")
    parser.add_argument(
        "--cache-dir",
        type=Path,
        default=None,
        help="Directory for cached results (default: $QUIVER_CACHE_DIR, caching off when unset).",
    )
    parser.add_argument("--no-cache", action="store_true", help="Neither read nor write the cache.")
    parser.add_argument("--log-file", type=Path, default=None, help="Also write logs to this file.")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="Log level for the stderr/file handlers (default: WARNING).",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker processes for reduced-word enumeration (default: $QUIVER_WORKERS or 1).",
    )

    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    words = commands.add_parser("reduced-words", help="List the reduced words of W.")
    words.add_argument("w", type=permutation)

    schubert = commands.add_parser("schubert", help="Single or double Schubert polynomial of W.")
    schubert.add_argument("w", type=permutation)
    schubert.add_argument("--double", action="store_true", help="Keep the y variables.")
    schubert.add_argument("--n", type=int, default=None, help="Compute inside S_n (default: smallest n).")

    universal = commands.add_parser("universal", help="Universal Schubert polynomial of W in Chern variables.")
    universal.add_argument("w", type=permutation)
    universal.add_argument("--double", action="store_true", help="Double version in c and d.")

    stanley = commands.add_parser("stanley", help="Stanley symmetric function of W.")
    stanley.add_argument("w", type=permutation)
    mode = stanley.add_mutually_exclusive_group()
    mode.add_argument("--vars", type=int, default=None, help="Evaluate in x_1..x_K.")
    mode.add_argument("--schur", action="store_true", help="Schur expansion (the default).")

    quiver = commands.add_parser("quiver-coeffs", help="Quiver coefficients of W over 2n-1 positions.")
    quiver.add_argument("w", type=permutation)
    quiver.add_argument("--n", type=int, required=True)
    source = quiver.add_mutually_exclusive_group()
    source.add_argument("--skew", action="store_true", help="Count rotated skew tableaux instead.")
    source.add_argument("--stanley-product", action="store_true", help="Sum Stanley products over factorizations.")
    quiver.add_argument("--strategy", choices=STRATEGIES, default="dp")

    split = commands.add_parser("split", help="Splitting formula for S_w along a (and b).")
    split.add_argument("w", type=permutation)
    split.add_argument("--a", type=int_list, required=True)
    split.add_argument("--b", type=parse_int_list, default=None, help="Omit for the single Schubert polynomial.")

    monomial = commands.add_parser("monomial-coeff", help="Coefficient of x^u y^v in S_w(X;Y).")
    monomial.add_argument("w", type=permutation)
    monomial.add_argument("--x", type=parse_int_list, required=True)
    monomial.add_argument("--y", type=parse_int_list, default=())

    giambelli = commands.add_parser("giambelli", help="Giambelli formula I or II for a partial flag.")
    giambelli.add_argument("w", type=permutation)
    giambelli.add_argument("--a", type=int_list, required=True)
    giambelli.add_argument("--n", type=int, required=True)
    giambelli.add_argument("--form", choices=("I", "II"), default="I")

    rank = commands.add_parser("rank", help="Rank matrix of W and its quiver rank conditions.")
    rank.add_argument("w", type=permutation)
    rank.add_argument("--n", type=int, required=True)

    verify = commands.add_parser("verify", help="Run an oracle-equivalence suite.")
    verify.add_argument("--suite", choices=SUITES, required=True)
    verify.add_argument("--seed", type=int, default=None, help="Sampling seed for s5-sample.")
    verify.add_argument("--report", type=Path, default=None, help="Write the check table as CSV.")

    return parser


@dataclasses.dataclass(slots=True)
class CliConfig:
    """Runtime settings shared by every subcommand."""

    base_dir: Path
    json_output: bool
    cache_dir: Optional[Path]
    log_file: Optional[Path]
    log_level: str
    workers: int
    report: Optional[Path]

    @property
    def use_cache(self) -> bool:
        return self.cache_dir is not None

    @classmethod
    def from_args(cls, args: argparse.Namespace, base_dir: Path) -> "CliConfig":
        """Create a config from parsed arguments, falling back to the environment."""

        def resolve(path: Optional[Path]) -> Optional[Path]:
            if path is None:
                return None
            return path if path.is_absolute() else base_dir / path

        cache_dir = args.cache_dir
        if cache_dir is None and os.getenv("QUIVER_CACHE_DIR"):
            cache_dir = Path(os.environ["QUIVER_CACHE_DIR"])
        if args.no_cache or _truthy(os.getenv("QUIVER_NO_CACHE")):
            cache_dir = None

        workers = args.workers
        if workers is None:
            env_workers = os.getenv("QUIVER_WORKERS", "").strip()
            try:
                workers = int(env_workers) if env_workers else 1
            except ValueError as exc:
                raise ValueError(f"QUIVER_WORKERS must be an integer, got {env_workers!r}") from exc
        if workers < 1:
            raise ValueError(f"Worker count must be at least 1, got {workers}")

        return cls(
            base_dir=base_dir,
            json_output=args.json,
            cache_dir=resolve(cache_dir),
            log_file=resolve(args.log_file),
            log_level=args.log_level,
            workers=workers,
            report=resolve(getattr(args, "report", None)),
        )
