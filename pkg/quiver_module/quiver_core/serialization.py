"""
JSON documents and tabular renderings emitted by the command line.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import polars as pl
from pydantic import BaseModel, ConfigDict, Field

from algebra.polyring import Polynomial
from combinatorics.permcore import Permutation
from combinatorics.shapes import Partition

from .giambelli import GiambelliExpression
from .quiver import LambdaKey


class TableEntryModel(BaseModel):
    """One coefficient of a partition-sequence table."""

    model_config = ConfigDict(populate_by_name=True)

    lambda_: List[List[int]] = Field(..., alias="lambda")
    coeff: int


class QuiverTableModel(BaseModel):
    w: str
    n: Optional[int] = None
    entries: List[TableEntryModel]


class TermModel(BaseModel):
    monomial: List[Tuple[str, int]]
    coeff: int


class PolynomialModel(BaseModel):
    """Sparse polynomial: text rendering plus the sorted term list."""

    text: str
    terms: List[TermModel]


class SplitModel(BaseModel):
    w: str
    a: List[int]
    b: Optional[List[int]] = None
    entries: List[TableEntryModel]
    polynomial: PolynomialModel


class FactorModel(BaseModel):
    symbol: str
    partition: List[int]


class GiambelliTermModel(BaseModel):
    coeff: int
    factors: List[FactorModel]


class GiambelliModel(BaseModel):
    w: str
    a: List[int]
    n: int
    form: str
    text: str
    terms: List[GiambelliTermModel]


class WordsModel(BaseModel):
    w: str
    length: int
    words: List[List[int]]


class SchurEntryModel(BaseModel):
    partition: List[int]
    coeff: int


class ExpansionModel(BaseModel):
    """Schur expansion of a Stanley symmetric function."""

    w: str
    entries: List[SchurEntryModel]


class MonomialModel(BaseModel):
    w: str
    x: List[int]
    y: List[int]
    coeff: int


class RankConditionModel(BaseModel):
    i: int
    j: int
    rank: int


class RankModel(BaseModel):
    w: str
    n: int
    length: int
    rank_matrix: List[List[int]]
    conditions: List[RankConditionModel]
    expected_codimension: int


class CheckModel(BaseModel):
    name: str
    cases: int
    failures: List[str]
    passed: bool
    seconds: float


class VerifyReportModel(BaseModel):
    suite: str
    seed: Optional[int] = None
    passed: bool
    checks: List[CheckModel]


class CacheRequestModel(BaseModel):
    """Canonical form of a cacheable request; its JSON is hashed into the cache key."""

    command: str
    args: Dict[str, str]
    json_output: bool


class CacheEntryModel(BaseModel):
    key: str
    request: CacheRequestModel
    output: str


def dump(model: BaseModel) -> str:
    return model.model_dump_json(by_alias=True)


def table_entries(table: Mapping[LambdaKey, int]) -> List[TableEntryModel]:
    return [
        TableEntryModel(lambda_=[alpha.to_list() for alpha in key], coeff=coeff)
        for key, coeff in sorted(table.items())
    ]


def table_model(w: Permutation, table: Mapping[LambdaKey, int], n: Optional[int] = None) -> QuiverTableModel:
    return QuiverTableModel(w=str(w), n=n, entries=table_entries(table))


def table_from_model(model: QuiverTableModel) -> Dict[LambdaKey, int]:
    return {tuple(Partition(parts) for parts in entry.lambda_): entry.coeff for entry in model.entries}


def polynomial_model(polynomial: Polynomial) -> PolynomialModel:
    return PolynomialModel(
        text=str(polynomial),
        terms=[TermModel(monomial=monomial, coeff=coeff) for monomial, coeff in polynomial.to_terms()],
    )


def giambelli_model(expression: GiambelliExpression) -> GiambelliModel:
    return GiambelliModel(
        w=str(expression.w),
        a=list(expression.a_seq),
        n=expression.n,
        form=expression.form,
        text=str(expression),
        terms=[
            GiambelliTermModel(
                coeff=term.coeff,
                factors=[FactorModel(symbol=str(symbol), partition=alpha.to_list()) for symbol, alpha in term.factors],
            )
            for term in expression.terms
        ],
    )


def format_key(key: Sequence[Partition]) -> str:
    return "(" + ", ".join(str(alpha) for alpha in key) + ")"


def table_frame(table: Mapping[LambdaKey, int]) -> pl.DataFrame:
    rows = [(format_key(key), coeff) for key, coeff in sorted(table.items())]
    return pl.DataFrame(rows, schema=["lambda", "coeff"], orient="row")


def expansion_frame(expansion: Mapping[Partition, int]) -> pl.DataFrame:
    rows = [(str(alpha), coeff) for alpha, coeff in sorted(expansion.items())]
    return pl.DataFrame(rows, schema=["partition", "coeff"], orient="row")


def report_frame(report: VerifyReportModel) -> pl.DataFrame:
    return pl.DataFrame(
        {
            "check": [check.name for check in report.checks],
            "cases": [check.cases for check in report.checks],
            "failures": [len(check.failures) for check in report.checks],
            "status": ["ok" if check.passed else "FAIL" for check in report.checks],
            "seconds": [round(check.seconds, 3) for check in report.checks],
        },
        schema={"check": pl.Utf8, "cases": pl.Int64, "failures": pl.Int64, "status": pl.Utf8, "seconds": pl.Float64},
    )


def render_frame(frame: pl.DataFrame) -> str:
    """Full-height plain-text rendering of *frame*."""
    with pl.Config(
        tbl_rows=-1,
        tbl_cols=-1,
        fmt_str_lengths=400,
        tbl_hide_dataframe_shape=True,
        tbl_hide_column_data_types=True,
        tbl_formatting="ASCII_MARKDOWN",
    ):
        return str(frame)
