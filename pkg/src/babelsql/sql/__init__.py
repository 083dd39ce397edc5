"""SQL dialect parsing, canonicalization, exact match, and corpus evaluation."""

from .canonical import CanonicalSql, Hardness, HARDNESS_LEVELS, canonicalize, hardness
from .evaluate import EvaluationReport, evaluate_corpus, load_predictions, write_report
from .match import CLAUSE_KEYS, MatchResult, exact_match
from .nodes import (
    AggOp,
    ArithOp,
    CmpOp,
    ColumnName,
    ColUnit,
    Condition,
    ConditionList,
    LogicOp,
    NumberValue,
    OrderBy,
    OrderDir,
    SelectItem,
    SelectStmt,
    SetOp,
    StringValue,
    TableSource,
    ValUnit,
)
from .parser import parse_sql
from .printer import print_sql
from .tokens import SqlParseError, SqlResolutionError, string_literals, tokenize_sql

__all__ = [
    "AggOp",
    "ArithOp",
    "CLAUSE_KEYS",
    "CanonicalSql",
    "CmpOp",
    "ColumnName",
    "ColUnit",
    "Condition",
    "ConditionList",
    "EvaluationReport",
    "HARDNESS_LEVELS",
    "Hardness",
    "LogicOp",
    "MatchResult",
    "NumberValue",
    "OrderBy",
    "OrderDir",
    "SelectItem",
    "SelectStmt",
    "SetOp",
    "StringValue",
    "TableSource",
    "ValUnit",
    "canonicalize",
    "evaluate_corpus",
    "exact_match",
    "hardness",
    "load_predictions",
    "parse_sql",
    "print_sql",
    "string_literals",
    "tokenize_sql",
    "write_report",
]
