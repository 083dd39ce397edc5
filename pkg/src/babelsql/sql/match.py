"""Exact-match comparison of canonical SQL forms."""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import CanonicalSql

#: Clause keys reported per comparison, in display order. The first group
#: mirrors the partial scores of the standard corpus evaluation; the last
#: entry covers the FROM table-set check folded into its exact match.
CLAUSE_KEYS = (
    "select",
    "select(no AGG)",
    "where",
    "where(no OP)",
    "group(no Having)",
    "group",
    "order",
    "and/or",
    "IUEN",
    "keywords",
    "from(tables)",
)


@dataclass(frozen=True)
class MatchResult:
    matched: bool
    per_clause: dict[str, bool]


def exact_match(pred: CanonicalSql, gold: CanonicalSql) -> MatchResult:
    """Clause-decomposed equality; symmetric and reflexive by construction."""
    if pred.abstract_values != gold.abstract_values:
        raise ValueError("cannot compare canonical forms under different value abstraction")
    per_clause = {
        "select": pred.select == gold.select,
        "select(no AGG)": pred.select_no_agg == gold.select_no_agg,
        "where": pred.where == gold.where,
        "where(no OP)": pred.where_no_op == gold.where_no_op,
        "group(no Having)": pred.group_no_having == gold.group_no_having,
        "group": pred.group == gold.group,
        "order": pred.order == gold.order,
        "and/or": pred.where_connectors == gold.where_connectors,
        "IUEN": pred.iuen == gold.iuen,
        "keywords": pred.keywords == gold.keywords,
        "from(tables)": pred.from_tables == gold.from_tables,
    }
    # Dataclass equality covers every clause above plus the limit field
    # (limit values only differ from presence in value-sensitive mode).
    return MatchResult(pred == gold, per_clause)
