"""Corpus-level exact-match evaluation with difficulty breakdown."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..dataset import Dataset
from ..errors import DataError
from .canonical import HARDNESS_LEVELS, CanonicalSql, canonicalize
from .match import CLAUSE_KEYS, exact_match
from .nodes import SelectStmt
from .parser import parse_sql
from .tokens import SqlParseError

_EMPTY_STMT = SelectStmt(items=(), sources=())


@dataclass(frozen=True)
class ExampleResult:
    example_id: str
    matched: bool
    hardness: str | None
    per_clause: dict[str, bool] | None
    gold_error: str | None = None
    pred_error: str | None = None


@dataclass(frozen=True)
class EvaluationReport:
    total: int
    matched: int
    accuracy: float
    per_hardness: dict[str, dict]
    per_clause: dict[str, dict]
    pred_unparsable: int
    gold_unparsable: int
    results: tuple[ExampleResult, ...] = field(repr=False)

    def as_dict(self, include_examples: bool = False) -> dict:
        out = {
            "total": self.total,
            "matched": self.matched,
            "accuracy": self.accuracy,
            "per_hardness": self.per_hardness,
            "per_clause": self.per_clause,
            "pred_unparsable": self.pred_unparsable,
            "gold_unparsable": self.gold_unparsable,
        }
        if include_examples:
            out["examples"] = [
                {
                    "example_id": r.example_id,
                    "matched": r.matched,
                    "hardness": r.hardness,
                    "gold_error": r.gold_error,
                    "pred_error": r.pred_error,
                }
                for r in self.results
            ]
        return out

    def format_lines(self) -> list[str]:
        lines = [f"exact match (all): {self.accuracy:.3f}  [{self.matched}/{self.total}]"]
        for level in HARDNESS_LEVELS:
            bucket = self.per_hardness[level]
            lines.append(
                f"exact match ({level}): {bucket['accuracy']:.3f}  "
                f"[{bucket['matched']}/{bucket['count']}]"
            )
        lines.append(f"unparsable predictions: {self.pred_unparsable}")
        if self.gold_unparsable:
            lines.append(f"unparsable gold (skipped): {self.gold_unparsable}")
        return lines


def evaluate_corpus(
    predictions: list[str], dataset: Dataset, abstract_values: bool = True
) -> EvaluationReport:
    """Score aligned predictions against the dataset's gold SQL.

    Unparsable predictions score zero; unparsable gold entries are skipped
    (reported, never silently dropped). Raises on length mismatch.
    """
    if len(predictions) != len(dataset.examples):
        raise DataError(
            f"{len(predictions)} predictions for {len(dataset.examples)} examples"
        )
    results: list[ExampleResult] = []
    for pred_text, example in zip(predictions, dataset.examples):
        schema = dataset.schema_for(example)
        try:
            gold_tree = parse_sql(example.gold_sql, schema)
        except SqlParseError as exc:
            results.append(
                ExampleResult(example.example_id, False, None, None, gold_error=str(exc))
            )
            continue
        gold = canonicalize(gold_tree, schema, abstract_values)
        pred_error = None
        try:
            pred_tree = parse_sql(pred_text, schema) if pred_text.strip() else _EMPTY_STMT
        except SqlParseError as exc:
            pred_error = str(exc)
            pred_tree = _EMPTY_STMT
        pred = canonicalize(pred_tree, schema, abstract_values)
        outcome = exact_match(pred, gold)
        results.append(
            ExampleResult(
                example.example_id,
                outcome.matched,
                gold.hardness.value,
                outcome.per_clause,
                pred_error=pred_error,
            )
        )
    return _aggregate(results)


def _aggregate(results: list[ExampleResult]) -> EvaluationReport:
    scored = [r for r in results if r.gold_error is None]
    matched = sum(1 for r in scored if r.matched)
    per_hardness = {}
    for level in HARDNESS_LEVELS:
        bucket = [r for r in scored if r.hardness == level]
        bucket_matched = sum(1 for r in bucket if r.matched)
        per_hardness[level] = {
            "count": len(bucket),
            "matched": bucket_matched,
            "accuracy": bucket_matched / len(bucket) if bucket else 0.0,
        }
    per_clause = {}
    for key in CLAUSE_KEYS:
        hits = sum(1 for r in scored if r.per_clause[key])
        per_clause[key] = {
            "matched": hits,
            "rate": hits / len(scored) if scored else 0.0,
        }
    return EvaluationReport(
        total=len(scored),
        matched=matched,
        accuracy=matched / len(scored) if scored else 0.0,
        per_hardness=per_hardness,
        per_clause=per_clause,
        pred_unparsable=sum(1 for r in scored if r.pred_error is not None),
        gold_unparsable=len(results) - len(scored),
        results=tuple(results),
    )


def load_predictions(path: str | Path, expected: int | None = None) -> list[str]:
    """One prediction per line, aligned to dataset order; blank line = empty."""
    lines = Path(path).read_text(encoding="utf-8").split("\n")
    if lines and lines[-1] == "":
        lines = lines[:-1]
    if expected is not None and len(lines) != expected:
        raise DataError(f"prediction file has {len(lines)} lines, expected {expected}")
    return lines


def write_report(report: EvaluationReport, path: str | Path, include_examples: bool = True) -> None:
    Path(path).write_text(
        json.dumps(report.as_dict(include_examples), ensure_ascii=False, indent=1) + "\n",
        encoding="utf-8",
    )
