"""Deterministic SQL rendering; ``parse(print(parse(x))) == parse(x)``.

Columns print fully qualified (``table.column``) so the output re-resolves
without aliases regardless of how the input spelled them.
"""

from __future__ import annotations

from .nodes import (
    AggOp,
    ColUnit,
    ConditionList,
    CmpOp,
    NumberValue,
    SelectStmt,
    StringValue,
    ValUnit,
)


def print_sql(stmt: SelectStmt) -> str:
    parts = [f"SELECT {'DISTINCT ' if stmt.distinct else ''}{_items(stmt)}"]
    sources = []
    for src in stmt.sources:
        if src.table is not None:
            sources.append(src.table)
        else:
            sources.append(f"( {print_sql(src.subquery)} )")
    parts.append("FROM " + " JOIN ".join(sources))
    if stmt.join_conditions:
        parts.append("ON " + _conditions(stmt.join_conditions))
    if stmt.where:
        parts.append("WHERE " + _conditions(stmt.where))
    if stmt.group_by:
        parts.append("GROUP BY " + " , ".join(_col_unit(c) for c in stmt.group_by))
    if stmt.having:
        parts.append("HAVING " + _conditions(stmt.having))
    if stmt.order_by is not None:
        items = " , ".join(_val_unit(v) for v in stmt.order_by.items)
        parts.append(f"ORDER BY {items} {stmt.order_by.direction.value.upper()}")
    if stmt.limit is not None:
        parts.append(f"LIMIT {stmt.limit}")
    text = " ".join(parts)
    if stmt.set_op is not None:
        text += f" {stmt.set_op.value.upper()} {print_sql(stmt.set_query)}"
    return text


def _items(stmt: SelectStmt) -> str:
    out = []
    for item in stmt.items:
        body = _val_unit(item.val)
        out.append(body if item.agg is AggOp.NONE else f"{item.agg.value}({body})")
    return " , ".join(out)


def _val_unit(val: ValUnit) -> str:
    left = _col_unit(val.left)
    if val.op is None:
        return left
    return f"{left} {val.op.value} {_col_unit(val.right)}"


def _col_unit(unit: ColUnit) -> str:
    name = unit.col.column if unit.col.table is None else f"{unit.col.table}.{unit.col.column}"
    if unit.agg is not AggOp.NONE:
        inner = f"DISTINCT {name}" if unit.distinct else name
        return f"{unit.agg.value}({inner})"
    return f"DISTINCT {name}" if unit.distinct else name


def _conditions(conds: ConditionList) -> str:
    parts = []
    for i, cond in enumerate(conds.conditions):
        if i > 0:
            parts.append(conds.connectors[i - 1].value.upper())
        chunk = _val_unit(cond.target)
        op = cond.op.value.upper() if cond.op.value.isalpha() else cond.op.value
        neg = "NOT " if cond.negated else ""
        if cond.op is CmpOp.BETWEEN:
            chunk += f" {neg}BETWEEN {_value(cond.value)} AND {_value(cond.value2)}"
        else:
            chunk += f" {neg}{op} {_value(cond.value)}"
        parts.append(chunk)
    return " ".join(parts)


def _value(value) -> str:
    if isinstance(value, SelectStmt):
        return f"( {print_sql(value)} )"
    if isinstance(value, NumberValue):
        return value.lexeme or _number(value.value)
    if isinstance(value, StringValue):
        if "'" in value.value:
            return f'"{value.value}"'
        return f"'{value.value}'"
    if isinstance(value, ColUnit):
        return _col_unit(value)
    raise TypeError(f"cannot print value {value!r}")


def _number(num: float) -> str:
    return str(int(num)) if float(num).is_integer() else str(num)
