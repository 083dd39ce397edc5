"""Automatable translation-consistency checks over loaded examples.

Findings report problems, they never fail: unknown schema identifiers in the
gold SQL, unparsable gold SQL, and quoted value literals that do not appear
in the question (mentioned values stay in English to match database content,
so a literal missing from the question usually means it was translated).
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum

from .dataset import Dataset, Example
from .schema import DatabaseSchema
from .sql.parser import parse_sql
from .sql.tokens import KEYWORDS, SqlParseError, TokKind, string_literals, tokenize_sql


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


class FindingCode(str, Enum):
    UNKNOWN_COLUMN = "unknown_column"
    UNKNOWN_TABLE = "unknown_table"
    MISSING_VALUE_LITERAL = "missing_value_literal"
    UNPARSABLE_SQL = "unparsable_sql"


@dataclass(frozen=True)
class QaFinding:
    example_id: str
    severity: Severity
    code: FindingCode
    message: str


_NUMBER_RE = re.compile(r"^[\d.,\s%+-]+$")


def validate_example(example: Example, schema: DatabaseSchema) -> list[QaFinding]:
    findings = _identifier_findings(example, schema)
    if not findings:
        try:
            parse_sql(example.gold_sql, schema)
        except SqlParseError as exc:
            findings.append(
                QaFinding(
                    example.example_id,
                    Severity.ERROR,
                    FindingCode.UNPARSABLE_SQL,
                    str(exc),
                )
            )
    findings.extend(_literal_findings(example))
    return findings


def validate_dataset(dataset: Dataset) -> list[QaFinding]:
    findings: list[QaFinding] = []
    for example in dataset.examples:
        findings.extend(validate_example(example, dataset.schema_for(example)))
    return findings


def _identifier_findings(example: Example, schema: DatabaseSchema) -> list[QaFinding]:
    """Report every SQL identifier that does not resolve against the schema."""
    try:
        tokens = tokenize_sql(example.gold_sql)
    except SqlParseError as exc:
        return [
            QaFinding(
                example.example_id, Severity.ERROR, FindingCode.UNPARSABLE_SQL, str(exc)
            )
        ]
    tables = {t.original_name.lower() for t in schema.tables}
    columns = {c.original_name.lower() for t in schema.tables for c in t.columns}
    aliases: dict[str, str] = {}
    for i, tok in enumerate(tokens):
        if tok.kind is TokKind.IDENT and tok.text == "as" and 0 < i < len(tokens) - 1:
            aliases[tokens[i + 1].text] = tokens[i - 1].text

    findings: list[QaFinding] = []
    seen: set[tuple[str, FindingCode]] = set()

    def report(token_text: str, code: FindingCode) -> None:
        if (token_text, code) in seen:
            return
        seen.add((token_text, code))
        findings.append(
            QaFinding(
                example.example_id,
                Severity.ERROR,
                code,
                f"{code.value.replace('_', ' ')}: {token_text!r}",
            )
        )

    for i, tok in enumerate(tokens):
        if tok.kind is not TokKind.IDENT or tok.text in KEYWORDS:
            continue
        prev = tokens[i - 1] if i > 0 else None
        after_source = prev is not None and prev.kind is TokKind.IDENT and prev.text in (
            "from",
            "join",
        )
        if "." in tok.text:
            prefix, col = tok.text.split(".", 1)
            table = aliases.get(prefix, prefix)
            if table not in tables:
                report(prefix, FindingCode.UNKNOWN_TABLE)
            elif col != "*" and col not in {
                c.original_name.lower() for c in schema.table(table).columns
            }:
                report(tok.text, FindingCode.UNKNOWN_COLUMN)
        elif after_source:
            if aliases.get(tok.text, tok.text) not in tables:
                report(tok.text, FindingCode.UNKNOWN_TABLE)
        elif tok.text in aliases:
            continue  # alias name used as a bare token
        elif tok.text not in columns and tok.text not in tables:
            report(tok.text, FindingCode.UNKNOWN_COLUMN)
    return findings


def _literal_findings(example: Example) -> list[QaFinding]:
    """Warn when a quoted SQL literal is not quoted verbatim in the question."""
    question = unicodedata.normalize("NFC", example.question).casefold()
    findings = []
    for literal in string_literals(example.gold_sql):
        text = literal.strip().strip("%_").strip()
        if not text or _NUMBER_RE.match(text):
            continue  # number-like literals are exempt
        needle = unicodedata.normalize("NFC", text).casefold()
        if needle not in question:
            findings.append(
                QaFinding(
                    example.example_id,
                    Severity.WARNING,
                    FindingCode.MISSING_VALUE_LITERAL,
                    f"value literal {literal!r} does not appear in the question",
                )
            )
    return findings
