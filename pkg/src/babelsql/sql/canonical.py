"""Clause-level canonical forms, exact-match semantics, and hardness.

The canonicalization reproduces the comparison rules of the standard corpus
evaluation: order-insensitive multisets for select items and where
conditions, order-sensitive group/order clauses, a keyword fingerprint,
foreign-key-equivalent column folding, and (by default) abstraction of
literal values and DISTINCT flags. Deliberate quirks of that evaluation are
preserved so results line up exactly:

* join (ON) conditions are never compared directly, only their keyword and
  hardness contributions;
* subqueries used as condition values compare order-sensitively with values
  abstracted but DISTINCT kept and no foreign-key folding;
* FROM-subqueries compare fully verbatim, values included;
* set-operation operands compare with the top level's foreign-key scope;
* LIMIT compares by presence only (real values only in value-sensitive mode).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..schema import ColumnRef, DatabaseSchema
from .nodes import (
    AggOp,
    CmpOp,
    ColumnName,
    ColUnit,
    Condition,
    ConditionList,
    LogicOp,
    NumberValue,
    OrderBy,
    SelectStmt,
    SetOp,
    StringValue,
    ValUnit,
)


class Hardness(str, Enum):
    EASY = "easy"
    MEDIUM = "medium"
    HARD = "hard"
    EXTRA = "extra"


HARDNESS_LEVELS = tuple(h.value for h in Hardness)


@dataclass(frozen=True)
class CanonicalSql:
    """Order-normalized, comparison-ready form of one statement."""

    select: tuple
    select_no_agg: tuple
    from_tables: tuple
    where: tuple
    where_connectors: frozenset
    where_no_op: tuple
    group: tuple | None
    group_no_having: tuple
    order: tuple | None
    limit: int | None
    iuen: tuple
    keywords: frozenset
    abstract_values: bool
    hardness: Hardness = field(compare=False)


def canonicalize(
    tree: SelectStmt | CanonicalSql,
    schema: DatabaseSchema | None = None,
    abstract_values: bool = True,
) -> CanonicalSql:
    """Canonicalize a parsed statement (idempotent on canonical input)."""
    if isinstance(tree, CanonicalSql):
        if tree.abstract_values != abstract_values:
            raise ValueError("already canonical under a different value-abstraction flag")
        return tree
    if schema is None:
        raise ValueError("canonicalize requires the statement's schema")
    fk_map = schema.foreign_key_groups()
    valid: set[ColumnRef] = set()
    for name in tree.source_tables():
        table = schema.table(name)
        if table is not None:
            valid.update(ColumnRef(name, c.original_name.lower()) for c in table.columns)
    ctx = _Ctx(
        abstract=abstract_values,
        strip_distinct=abstract_values,
        fk_map=fk_map,
        valid=frozenset(valid),
        limit_presence=abstract_values,
    )
    return _canon_stmt(tree, ctx)


@dataclass(frozen=True)
class _Ctx:
    abstract: bool
    strip_distinct: bool
    fk_map: dict
    valid: frozenset
    limit_presence: bool


def _sorted(values) -> tuple:
    return tuple(sorted(values, key=repr))


def _col_id(col: ColumnName, ctx: _Ctx) -> str:
    if col.table is None:
        return "*"
    ref = ColumnRef(col.table, col.column)
    if ctx.fk_map and ref in ctx.valid:
        ref = ctx.fk_map.get(ref, ref)
    return ref.key()


def _col_unit(unit: ColUnit, ctx: _Ctx) -> tuple:
    distinct = None if ctx.strip_distinct else unit.distinct
    return (unit.agg.value, _col_id(unit.col, ctx), distinct)


def _val_unit(val: ValUnit, ctx: _Ctx) -> tuple:
    return (
        val.op.value if val.op is not None else None,
        _col_unit(val.left, ctx),
        _col_unit(val.right, ctx) if val.right is not None else None,
    )


def _value(value, ctx: _Ctx):
    if value is None:
        return None
    if isinstance(value, SelectStmt):
        # Condition-value subqueries keep DISTINCT and unfolded columns.
        return ("sql", _struct_stmt(value, ctx.abstract, ctx.limit_presence))
    if ctx.abstract:
        return None
    if isinstance(value, NumberValue):
        return ("num", value.value)
    if isinstance(value, StringValue):
        return ("str", value.value)
    if isinstance(value, ColUnit):
        return ("col", _col_unit(value, ctx))
    raise TypeError(f"unexpected condition value {value!r}")


def _cond(cond: Condition, ctx: _Ctx) -> tuple:
    return (
        cond.negated,
        cond.op.value,
        _val_unit(cond.target, ctx),
        _value(cond.value, ctx),
        _value(cond.value2, ctx),
    )


def _interleaved(conds: ConditionList, ctx: _Ctx) -> tuple:
    out: list = []
    for i, cond in enumerate(conds.conditions):
        if i > 0:
            out.append(conds.connectors[i - 1].value)
        out.append(_cond(cond, ctx))
    return tuple(out)


def _canon_stmt(stmt: SelectStmt, ctx: _Ctx) -> CanonicalSql:
    select_items = _sorted((item.agg.value, _val_unit(item.val, ctx)) for item in stmt.items)
    select = (None if ctx.strip_distinct else stmt.distinct, select_items)
    select_no_agg = _sorted(_val_unit(item.val, ctx) for item in stmt.items)

    tables = []
    for src in stmt.sources:
        if src.table is not None:
            tables.append(("table", src.table))
        else:
            # FROM-subqueries compare verbatim, values included.
            tables.append(("sql", _struct_stmt(src.subquery, False, ctx.limit_presence)))
    from_tables = _sorted(tables)

    where = _sorted(_cond(c, ctx) for c in stmt.where.conditions)
    where_connectors = frozenset(c.value for c in stmt.where.connectors)
    where_no_op = _sorted(_val_unit(c.target, ctx) for c in stmt.where.conditions)

    if stmt.group_by:
        group_cols = tuple(_col_id(g.col, ctx) for g in stmt.group_by)
        group = (group_cols, _interleaved(stmt.having, ctx))
        group_no_having = _sorted(
            cid.split(".", 1)[1] if "." in cid else cid for cid in group_cols
        )
    else:
        group = None
        group_no_having = ()

    if stmt.order_by is not None:
        order = (
            stmt.order_by.direction.value,
            tuple(_val_unit(v, ctx) for v in stmt.order_by.items),
            stmt.limit is not None,
        )
    else:
        order = None

    if stmt.limit is None:
        limit = None
    else:
        limit = 1 if ctx.limit_presence else stmt.limit

    nested = {op: None for op in SetOp}
    if stmt.set_op is not None:
        nested[stmt.set_op] = _canon_stmt(stmt.set_query, ctx)
    iuen = (nested[SetOp.INTERSECT], nested[SetOp.UNION], nested[SetOp.EXCEPT])

    return CanonicalSql(
        select=select,
        select_no_agg=select_no_agg,
        from_tables=from_tables,
        where=where,
        where_connectors=where_connectors,
        where_no_op=where_no_op,
        group=group,
        group_no_having=group_no_having,
        order=order,
        limit=limit,
        iuen=iuen,
        keywords=_keywords(stmt),
        abstract_values=ctx.abstract,
        hardness=compute_hardness(stmt),
    )


# -- verbatim structural encoding (subquery comparison) ----------------------


def _struct_stmt(stmt: SelectStmt, abstract: bool, limit_presence: bool) -> tuple:
    def s_col(unit: ColUnit) -> tuple:
        col = "*" if unit.col.table is None else f"{unit.col.table}.{unit.col.column}"
        return (unit.agg.value, col, unit.distinct)

    def s_val(val: ValUnit) -> tuple:
        return (
            val.op.value if val.op is not None else None,
            s_col(val.left),
            s_col(val.right) if val.right is not None else None,
        )

    def s_value(value):
        if value is None:
            return None
        if isinstance(value, SelectStmt):
            return ("sql", _struct_stmt(value, abstract, limit_presence))
        if abstract:
            return None
        if isinstance(value, NumberValue):
            return ("num", value.value)
        if isinstance(value, StringValue):
            return ("str", value.value)
        if isinstance(value, ColUnit):
            return ("col", s_col(value))
        raise TypeError(f"unexpected condition value {value!r}")

    def s_conds(conds: ConditionList) -> tuple:
        out: list = []
        for i, cond in enumerate(conds.conditions):
            if i > 0:
                out.append(conds.connectors[i - 1].value)
            out.append(
                (cond.negated, cond.op.value, s_val(cond.target),
                 s_value(cond.value), s_value(cond.value2))
            )
        return tuple(out)

    sources = tuple(
        ("table", src.table)
        if src.table is not None
        # Values inside FROM-subqueries always stay verbatim.
        else ("sql", _struct_stmt(src.subquery, False, limit_presence))
        for src in stmt.sources
    )
    order = (
        (stmt.order_by.direction.value, tuple(s_val(v) for v in stmt.order_by.items))
        if stmt.order_by is not None
        else None
    )
    if stmt.limit is None:
        limit = None
    else:
        limit = 1 if limit_presence else stmt.limit
    iuen = (
        (stmt.set_op.value, _struct_stmt(stmt.set_query, abstract, limit_presence))
        if stmt.set_op is not None
        else None
    )
    return (
        (stmt.distinct, tuple((item.agg.value, s_val(item.val)) for item in stmt.items)),
        sources,
        s_conds(stmt.join_conditions),
        s_conds(stmt.where),
        tuple(s_col(g) for g in stmt.group_by),
        s_conds(stmt.having),
        order,
        limit,
        iuen,
    )


# -- keyword fingerprint ------------------------------------------------------


def _keywords(stmt: SelectStmt) -> frozenset:
    kw: set[str] = set()
    if stmt.where:
        kw.add("where")
    if stmt.group_by:
        kw.add("group")
    if stmt.having:
        kw.add("having")
    if stmt.order_by is not None:
        kw.add(stmt.order_by.direction.value)
    if stmt.limit is not None:
        kw.add("limit")
    if stmt.set_op is not None:
        kw.add(stmt.set_op.value)
    connectors = (
        stmt.join_conditions.connectors + stmt.where.connectors + stmt.having.connectors
    )
    if any(c is LogicOp.OR for c in connectors):
        kw.add("or")
    conds = (
        stmt.join_conditions.conditions + stmt.where.conditions + stmt.having.conditions
    )
    if any(c.negated for c in conds):
        kw.add("not")
    if any(c.op is CmpOp.IN for c in conds):
        kw.add("in")
    if any(c.op is CmpOp.LIKE for c in conds):
        kw.add("like")
    return frozenset(kw)


# -- hardness -----------------------------------------------------------------


def compute_hardness(stmt: SelectStmt) -> Hardness:
    """Difficulty level from component counts of the statement."""
    comp1 = _count_component1(stmt)
    comp2 = _count_component2(stmt)
    others = _count_others(stmt)
    if comp1 <= 1 and others == 0 and comp2 == 0:
        return Hardness.EASY
    if (others <= 2 and comp1 <= 1 and comp2 == 0) or (
        comp1 <= 2 and others < 2 and comp2 == 0
    ):
        return Hardness.MEDIUM
    if (
        (others > 2 and comp1 <= 2 and comp2 == 0)
        or (2 < comp1 <= 3 and others <= 2 and comp2 == 0)
        or (comp1 <= 1 and others == 0 and comp2 <= 1)
    ):
        return Hardness.HARD
    return Hardness.EXTRA


def hardness(gold: CanonicalSql) -> Hardness:
    """Difficulty carried by the canonical form (computed at canonicalize)."""
    return gold.hardness


def _all_conditions(stmt: SelectStmt) -> tuple[Condition, ...]:
    return (
        stmt.join_conditions.conditions + stmt.where.conditions + stmt.having.conditions
    )


def _count_component1(stmt: SelectStmt) -> int:
    count = 0
    if stmt.where:
        count += 1
    if stmt.group_by:
        count += 1
    if stmt.order_by is not None:
        count += 1
    if stmt.limit is not None:
        count += 1
    if stmt.sources:
        count += len(stmt.sources) - 1
    connectors = (
        stmt.join_conditions.connectors + stmt.where.connectors + stmt.having.connectors
    )
    count += sum(1 for c in connectors if c is LogicOp.OR)
    count += sum(1 for c in _all_conditions(stmt) if c.op is CmpOp.LIKE)
    return count


def _count_component2(stmt: SelectStmt) -> int:
    count = 0
    for cond in _all_conditions(stmt):
        if isinstance(cond.value, SelectStmt):
            count += 1
        if isinstance(cond.value2, SelectStmt):
            count += 1
    if stmt.set_query is not None:
        count += 1
    return count


def _count_others(stmt: SelectStmt) -> int:
    # Aggregation counting mirrors the corpus script, including its habit of
    # counting negated conditions and having-connectors as "aggregations".
    agg = sum(1 for item in stmt.items if item.agg is not AggOp.NONE)
    agg += sum(1 for c in stmt.where.conditions if c.negated)
    agg += sum(1 for g in stmt.group_by if g.agg is not AggOp.NONE)
    if stmt.order_by is not None:
        for val in stmt.order_by.items:
            if val.left.agg is not AggOp.NONE:
                agg += 1
            if val.right is not None and val.right.agg is not AggOp.NONE:
                agg += 1
    agg += sum(1 for c in stmt.having.conditions if c.negated)
    agg += len(stmt.having.connectors)
    count = 0
    if agg > 1:
        count += 1
    if len(stmt.items) > 1:
        count += 1
    if len(stmt.where.conditions) > 1:
        count += 1
    if len(stmt.group_by) > 1:
        count += 1
    return count
