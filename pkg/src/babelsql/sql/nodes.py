"""Typed AST for the Spider SQL dialect.

All nodes are frozen and hashable. Column references are stored fully
resolved (lowercased table/column original names); aliases are flattened
away during parsing, mirroring how the corpus metric compares queries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Union


class AggOp(str, Enum):
    NONE = "none"
    MAX = "max"
    MIN = "min"
    COUNT = "count"
    SUM = "sum"
    AVG = "avg"


class ArithOp(str, Enum):
    MINUS = "-"
    PLUS = "+"
    TIMES = "*"
    DIVIDE = "/"


class CmpOp(str, Enum):
    BETWEEN = "between"
    EQ = "="
    GT = ">"
    LT = "<"
    GE = ">="
    LE = "<="
    NE = "!="
    IN = "in"
    LIKE = "like"
    IS = "is"
    EXISTS = "exists"


class LogicOp(str, Enum):
    AND = "and"
    OR = "or"


class OrderDir(str, Enum):
    ASC = "asc"
    DESC = "desc"


class SetOp(str, Enum):
    INTERSECT = "intersect"
    UNION = "union"
    EXCEPT = "except"


@dataclass(frozen=True)
class ColumnName:
    """Resolved column; ``table`` is None only for the ``*`` pseudo-column."""

    table: str | None
    column: str

    @property
    def is_star(self) -> bool:
        return self.column == "*"


@dataclass(frozen=True)
class ColUnit:
    agg: AggOp
    col: ColumnName
    distinct: bool = False


@dataclass(frozen=True)
class ValUnit:
    """A column expression: ``left`` or ``left <op> right``."""

    left: ColUnit
    op: ArithOp | None = None
    right: ColUnit | None = None


@dataclass(frozen=True)
class NumberValue:
    value: float
    lexeme: str = field(default="", compare=False)


@dataclass(frozen=True)
class StringValue:
    """String literal content; quotes normalized away, case preserved."""

    value: str


Value = Union[NumberValue, StringValue, ColUnit, "SelectStmt"]


@dataclass(frozen=True)
class Condition:
    negated: bool
    op: CmpOp
    target: ValUnit
    value: "Value | None" = None
    value2: "Value | None" = None  # second bound of BETWEEN


@dataclass(frozen=True)
class ConditionList:
    """Flat boolean expression: conditions joined by and/or (no grouping)."""

    conditions: tuple[Condition, ...] = ()
    connectors: tuple[LogicOp, ...] = ()

    def __post_init__(self) -> None:
        if self.conditions and len(self.connectors) != len(self.conditions) - 1:
            raise ValueError("need exactly one connector between consecutive conditions")

    def __bool__(self) -> bool:
        return bool(self.conditions)

    def __len__(self) -> int:
        return len(self.conditions)


@dataclass(frozen=True)
class TableSource:
    """Either a schema table (by original name) or a FROM-subquery."""

    table: str | None = None
    subquery: "SelectStmt | None" = None

    def __post_init__(self) -> None:
        if (self.table is None) == (self.subquery is None):
            raise ValueError("table source is exactly one of table / subquery")


@dataclass(frozen=True)
class SelectItem:
    agg: AggOp
    val: ValUnit


@dataclass(frozen=True)
class OrderBy:
    direction: OrderDir
    items: tuple[ValUnit, ...]


@dataclass(frozen=True)
class SelectStmt:
    items: tuple[SelectItem, ...]
    sources: tuple[TableSource, ...]
    distinct: bool = False
    join_conditions: ConditionList = ConditionList()
    where: ConditionList = ConditionList()
    group_by: tuple[ColUnit, ...] = ()
    having: ConditionList = ConditionList()
    order_by: OrderBy | None = None
    limit: int | None = None
    set_op: SetOp | None = None
    set_query: "SelectStmt | None" = None

    def __post_init__(self) -> None:
        if (self.set_op is None) != (self.set_query is None):
            raise ValueError("set_op and set_query must be set together")

    def source_tables(self) -> list[str]:
        return [src.table for src in self.sources if src.table is not None]

    def subqueries(self) -> list["SelectStmt"]:
        """Directly nested statements (condition values and set operands)."""
        nested: list[SelectStmt] = []
        for part in (self.join_conditions, self.where, self.having):
            for cond in part.conditions:
                for val in (cond.value, cond.value2):
                    if isinstance(val, SelectStmt):
                        nested.append(val)
        if self.set_query is not None:
            nested.append(self.set_query)
        return nested
