"""Example/dataset types, Spider-format examples ingestion, and statistics."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Iterable

from .errors import DatasetFileError
from .languages import Language
from .schema import DatabaseSchema


class Split(str, Enum):
    TRAIN = "train"
    DEV = "dev"

    @classmethod
    def parse(cls, raw: str) -> "Split":
        try:
            return cls(raw.strip().lower())
        except ValueError:
            raise ValueError(f"unknown split: {raw!r}") from None


@dataclass(frozen=True)
class Example:
    language: Language
    db_id: str
    question: str
    gold_sql: str
    example_id: str
    # Set at load time when the gold SQL does not parse; the example is kept.
    sql_parse_error: str | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Dataset:
    split: Split
    examples: tuple[Example, ...]
    schemas: dict[str, DatabaseSchema]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        missing: list[str] = []
        for ex in self.examples:
            if not ex.question.strip():
                raise DatasetFileError(f"example {ex.example_id} has an empty question")
            if ex.example_id in seen:
                raise DatasetFileError(f"duplicate example_id {ex.example_id!r}")
            seen.add(ex.example_id)
            if ex.db_id not in self.schemas:
                missing.append(ex.example_id)
        if missing:
            raise DatasetFileError("examples reference unknown databases", example_ids=missing)

    def schema_for(self, example: Example) -> DatabaseSchema:
        return self.schemas[example.db_id]

    def example_ids(self) -> tuple[str, ...]:
        return tuple(ex.example_id for ex in self.examples)

    def with_examples(self, examples: Iterable[Example]) -> "Dataset":
        return replace(self, examples=tuple(examples))


def load_examples(
    path: str | Path,
    schemas: dict[str, DatabaseSchema],
    split: Split = Split.TRAIN,
    language: Language = Language.EN,
) -> Dataset:
    """Load a Spider-format examples file against already-loaded schemas.

    Entries need ``db_id``, ``question`` and ``query``; ``example_id`` and
    ``language`` are honored when present and otherwise derived (the id from
    split + position, so parallel files in different languages align).
    Unparsable gold SQL is flagged on the example, never dropped.
    """
    from .sql import SqlParseError, parse_sql  # local import to avoid a cycle

    path = Path(path)
    try:
        entries = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DatasetFileError(f"{path}: invalid JSON: {exc.msg} (char {exc.pos})") from exc
    if not isinstance(entries, list):
        raise DatasetFileError(f"{path}: examples file must be a JSON array")

    examples: list[Example] = []
    for i, entry in enumerate(entries):
        try:
            db_id = str(entry["db_id"])
            question = str(entry["question"])
            query = str(entry["query"])
        except (KeyError, TypeError):
            raise DatasetFileError(f"{path}: entry {i} lacks db_id/question/query") from None
        example_id = str(entry.get("example_id") or f"{split.value}-{i:05d}")
        lang = Language.parse(entry["language"]) if "language" in entry else language
        parse_error = None
        schema = schemas.get(db_id)
        if schema is not None:
            try:
                parse_sql(query, schema)
            except SqlParseError as exc:
                parse_error = str(exc)
        examples.append(Example(lang, db_id, question, query, example_id, parse_error))
    return Dataset(split, tuple(examples), dict(schemas))


def example_to_entry(example: Example) -> dict:
    return {
        "db_id": example.db_id,
        "question": example.question,
        "query": example.gold_sql,
        "example_id": example.example_id,
        "language": example.language.value,
    }


def emit_examples(examples: Iterable[Example], path: str | Path) -> None:
    entries = [example_to_entry(ex) for ex in examples]
    Path(path).write_text(
        json.dumps(entries, ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
    )


@dataclass(frozen=True)
class DatasetStats:
    questions: int
    distinct_queries: int
    databases: int
    tables: int
    columns: int
    per_language: dict[str, int]
    unparsable_gold: int

    def as_dict(self) -> dict:
        return {
            "questions": self.questions,
            "distinct_queries": self.distinct_queries,
            "databases": self.databases,
            "tables": self.tables,
            "columns": self.columns,
            "per_language": dict(sorted(self.per_language.items())),
            "unparsable_gold": self.unparsable_gold,
        }


def dataset_stats(dataset: Dataset) -> DatasetStats:
    """Exact corpus counts; invariant under example reordering."""
    per_language = Counter(ex.language.value for ex in dataset.examples)
    return DatasetStats(
        questions=len(dataset.examples),
        distinct_queries=len({ex.gold_sql.strip() for ex in dataset.examples}),
        databases=len(dataset.schemas),
        tables=sum(len(s.tables) for s in dataset.schemas.values()),
        columns=sum(len(t.columns) for s in dataset.schemas.values() for t in s.tables),
        per_language=dict(per_language),
        unparsable_gold=sum(1 for ex in dataset.examples if ex.sql_parse_error is not None),
    )
