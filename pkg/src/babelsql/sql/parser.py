"""Recursive-descent parser for the Spider SQL dialect.

Grammar coverage matches the corpus conventions: table aliases only via
``AS``, joins written with ``JOIN ... ON``, flat and/or conditions without
parentheses, at most one set operation per statement level (chains nest to
the right), no CTEs or window functions. Identifier resolution uses the
statement-wide alias map plus, for bare columns, the FROM tables of the
current nesting level in order of appearance.
"""

from __future__ import annotations

from ..schema import DatabaseSchema
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
from .tokens import (
    CLAUSE_STARTERS,
    SqlParseError,
    SqlResolutionError,
    Token,
    TokKind,
    tokenize_sql,
)

_AGG_NAMES = {"max", "min", "count", "sum", "avg"}
_ARITH = {"-": ArithOp.MINUS, "+": ArithOp.PLUS, "*": ArithOp.TIMES, "/": ArithOp.DIVIDE}
_CMP_NAMES = {
    "between": CmpOp.BETWEEN,
    "=": CmpOp.EQ,
    ">": CmpOp.GT,
    "<": CmpOp.LT,
    ">=": CmpOp.GE,
    "<=": CmpOp.LE,
    "!=": CmpOp.NE,
    "in": CmpOp.IN,
    "like": CmpOp.LIKE,
    "is": CmpOp.IS,
    "exists": CmpOp.EXISTS,
}
_SET_OPS = {"intersect": SetOp.INTERSECT, "union": SetOp.UNION, "except": SetOp.EXCEPT}
_BREAKERS = frozenset({")", ";"})


def parse_sql(text: str, schema: DatabaseSchema) -> SelectStmt:
    """Parse ``text`` against ``schema``; raises :class:`SqlParseError`."""
    if not text.strip():
        raise SqlParseError("empty SQL text")
    tokens = tokenize_sql(text)
    parser = _Parser(tokens, schema)
    stmt, pos = parser.statement(0)
    while pos < len(tokens) and tokens[pos].text == ";":
        pos += 1
    if pos != len(tokens):
        tok = tokens[pos]
        raise SqlParseError(f"unexpected token {tok.text!r} after statement", tok.pos)
    return stmt


class _Parser:
    def __init__(self, tokens: list[Token], schema: DatabaseSchema):
        self.toks = tokens
        self.schema = schema
        self.table_columns: dict[str, list[str]] = {
            t.original_name.lower(): [c.original_name.lower() for c in t.columns]
            for t in schema.tables
        }
        self.aliases = self._scan_aliases()

    def _scan_aliases(self) -> dict[str, str]:
        aliases: dict[str, str] = {}
        for i, tok in enumerate(self.toks):
            if tok.kind is TokKind.IDENT and tok.text == "as":
                if i == 0 or i + 1 >= len(self.toks):
                    raise SqlParseError("dangling AS", tok.pos)
                aliases[self.toks[i + 1].text] = self.toks[i - 1].text
        for name in self.table_columns:
            if name in aliases:
                raise SqlParseError(f"alias {name!r} shadows a table name")
            aliases[name] = name
        return aliases

    # -- token helpers ------------------------------------------------------

    def _tok(self, pos: int) -> Token | None:
        return self.toks[pos] if pos < len(self.toks) else None

    def _text(self, pos: int) -> str | None:
        tok = self._tok(pos)
        return tok.text if tok is not None and tok.kind is not TokKind.STRING else None

    def _expect(self, pos: int, text: str) -> int:
        tok = self._tok(pos)
        if tok is None:
            raise SqlParseError(f"expected {text!r}, found end of input")
        if tok.kind is TokKind.STRING or tok.text != text:
            raise SqlParseError(f"expected {text!r}, found {tok.text!r}", tok.pos)
        return pos + 1

    # -- statement ----------------------------------------------------------

    def statement(self, pos: int) -> tuple[SelectStmt, int]:
        is_block = self._text(pos) == "("
        if is_block:
            pos += 1
        if self._text(pos) != "select":
            tok = self._tok(pos)
            raise SqlParseError(
                "expected SELECT"
                + (f", found {tok.text!r}" if tok is not None else " at end of input"),
                tok.pos if tok is not None else None,
            )
        # The FROM clause is parsed first so bare columns in the select list
        # can resolve against this level's tables.
        from_idx = self._find_from(pos)
        sources, join_conds, defaults, after_from = self._from_clause(from_idx)
        distinct, items, _ = self._select_list(pos, defaults)
        pos = after_from
        where = ConditionList()
        if self._text(pos) == "where":
            where, pos = self._condition_list(pos + 1, defaults)
        group_by: tuple[ColUnit, ...] = ()
        if self._text(pos) == "group":
            pos = self._expect(pos + 1, "by")
            group_by, pos = self._group_cols(pos, defaults)
        having = ConditionList()
        if self._text(pos) == "having":
            having, pos = self._condition_list(pos + 1, defaults)
        order_by = None
        if self._text(pos) == "order":
            pos = self._expect(pos + 1, "by")
            order_by, pos = self._order_items(pos, defaults)
        limit = None
        if self._text(pos) == "limit":
            tok = self._tok(pos + 1)
            if tok is None or tok.kind is not TokKind.NUMBER:
                raise SqlParseError(
                    "LIMIT requires a number", tok.pos if tok else None
                )
            limit = int(float(tok.text))
            if limit < 0:
                raise SqlParseError("LIMIT must be non-negative", tok.pos)
            pos += 2
        while self._text(pos) == ";":
            pos += 1
        if is_block:
            pos = self._expect(pos, ")")
        while self._text(pos) == ";":
            pos += 1
        set_op = None
        set_query = None
        text = self._text(pos)
        if text in _SET_OPS:
            set_op = _SET_OPS[text]
            set_query, pos = self.statement(pos + 1)
        return (
            SelectStmt(
                items=items,
                sources=sources,
                distinct=distinct,
                join_conditions=join_conds,
                where=where,
                group_by=group_by,
                having=having,
                order_by=order_by,
                limit=limit,
                set_op=set_op,
                set_query=set_query,
            ),
            pos,
        )

    def _find_from(self, pos: int) -> int:
        for i in range(pos, len(self.toks)):
            tok = self.toks[i]
            if tok.kind is TokKind.IDENT and tok.text == "from":
                return i
        raise SqlParseError("statement has no FROM clause")

    # -- clauses ------------------------------------------------------------

    def _select_list(
        self, pos: int, defaults: list[str]
    ) -> tuple[bool, tuple[SelectItem, ...], int]:
        pos = self._expect(pos, "select")
        distinct = False
        if self._text(pos) == "distinct":
            distinct = True
            pos += 1
        items: list[SelectItem] = []
        while pos < len(self.toks) and self._text(pos) not in CLAUSE_STARTERS:
            agg = AggOp.NONE
            if self._text(pos) in _AGG_NAMES:
                agg = AggOp(self._text(pos))
                pos += 1
            val, pos = self._val_unit(pos, defaults)
            items.append(SelectItem(agg, val))
            if self._text(pos) == ",":
                pos += 1
        if not items:
            tok = self._tok(pos)
            raise SqlParseError("empty select list", tok.pos if tok else None)
        return distinct, tuple(items), pos

    def _from_clause(
        self, pos: int
    ) -> tuple[tuple[TableSource, ...], ConditionList, list[str], int]:
        pos += 1  # past FROM
        sources: list[TableSource] = []
        defaults: list[str] = []
        conds: list[Condition] = []
        connectors: list[LogicOp] = []
        while pos < len(self.toks):
            is_block = self._text(pos) == "("
            if is_block:
                pos += 1
            if self._text(pos) == "select":
                sub, pos = self.statement(pos)
                sources.append(TableSource(subquery=sub))
            else:
                if self._text(pos) == "join":
                    pos += 1
                table, pos = self._table_name(pos)
                sources.append(TableSource(table=table))
                defaults.append(table)
            if self._text(pos) == "on":
                group, pos = self._condition_list(pos + 1, defaults)
                if conds and group.conditions:
                    connectors.append(LogicOp.AND)
                conds.extend(group.conditions)
                connectors.extend(group.connectors)
            if is_block:
                pos = self._expect(pos, ")")
            text = self._text(pos)
            if pos >= len(self.toks) or text in CLAUSE_STARTERS or text in _BREAKERS:
                break
        if not sources:
            raise SqlParseError("FROM clause names no sources")
        return tuple(sources), ConditionList(tuple(conds), tuple(connectors)), defaults, pos

    def _table_name(self, pos: int) -> tuple[str, int]:
        tok = self._tok(pos)
        if tok is None or tok.kind is not TokKind.IDENT:
            raise SqlParseError(
                "expected a table name", tok.pos if tok is not None else None
            )
        name = self.aliases.get(tok.text)
        if name is None or name not in self.table_columns:
            raise SqlResolutionError(tok.text, "table", tok.pos)
        pos += 1
        if self._text(pos) == "as":
            pos += 2  # alias already collected in the prescan
        return name, pos

    def _condition_list(self, pos: int, defaults: list[str]) -> tuple[ConditionList, int]:
        conds: list[Condition] = []
        connectors: list[LogicOp] = []
        while pos < len(self.toks):
            val, pos = self._val_unit(pos, defaults)
            negated = False
            if self._text(pos) == "not":
                negated = True
                pos += 1
            op_text = self._text(pos)
            if op_text not in _CMP_NAMES:
                tok = self._tok(pos)
                found = repr(tok.text) if tok is not None else "end of input"
                raise SqlParseError(
                    f"expected a comparison operator, found {found}",
                    tok.pos if tok is not None else None,
                )
            op = _CMP_NAMES[op_text]
            pos += 1
            if op is CmpOp.BETWEEN:
                value, pos = self._value(pos, defaults)
                pos = self._expect(pos, "and")
                value2, pos = self._value(pos, defaults)
            else:
                value, pos = self._value(pos, defaults)
                value2 = None
            conds.append(Condition(negated, op, val, value, value2))
            text = self._text(pos)
            if (
                pos >= len(self.toks)
                or text in CLAUSE_STARTERS
                or text in _BREAKERS
                or text in ("join", "on", "as")
            ):
                break
            if text in ("and", "or"):
                connectors.append(LogicOp(text))
                pos += 1
        return ConditionList(tuple(conds), tuple(connectors)), pos

    def _group_cols(self, pos: int, defaults: list[str]) -> tuple[tuple[ColUnit, ...], int]:
        cols: list[ColUnit] = []
        while pos < len(self.toks):
            text = self._text(pos)
            if text in CLAUSE_STARTERS or text in _BREAKERS:
                break
            col, pos = self._col_unit(pos, defaults)
            cols.append(col)
            if self._text(pos) == ",":
                pos += 1
            else:
                break
        return tuple(cols), pos

    def _order_items(self, pos: int, defaults: list[str]) -> tuple[OrderBy, int]:
        items: list[ValUnit] = []
        direction = OrderDir.ASC
        while pos < len(self.toks):
            text = self._text(pos)
            if text in CLAUSE_STARTERS or text in _BREAKERS:
                break
            val, pos = self._val_unit(pos, defaults)
            items.append(val)
            if self._text(pos) in ("asc", "desc"):
                direction = OrderDir(self._text(pos))
                pos += 1
            if self._text(pos) == ",":
                pos += 1
            else:
                break
        if not items:
            tok = self._tok(pos)
            raise SqlParseError("empty ORDER BY", tok.pos if tok else None)
        return OrderBy(direction, tuple(items)), pos

    # -- expressions ----------------------------------------------------------

    def _val_unit(self, pos: int, defaults: list[str]) -> tuple[ValUnit, int]:
        is_block = self._text(pos) == "("
        if is_block:
            pos += 1
        left, pos = self._col_unit(pos, defaults)
        op = None
        right = None
        text = self._text(pos)
        if text in _ARITH:
            op = _ARITH[text]
            right, pos = self._col_unit(pos + 1, defaults)
        if is_block:
            pos = self._expect(pos, ")")
        return ValUnit(left, op, right), pos

    def _col_unit(self, pos: int, defaults: list[str]) -> tuple[ColUnit, int]:
        is_block = self._text(pos) == "("
        if is_block:
            pos += 1
        text = self._text(pos)
        if text in _AGG_NAMES:
            agg = AggOp(text)
            pos = self._expect(pos + 1, "(")
            distinct = False
            if self._text(pos) == "distinct":
                distinct = True
                pos += 1
            col, pos = self._column(pos, defaults)
            pos = self._expect(pos, ")")
            unit = ColUnit(agg, col, distinct)
        else:
            distinct = False
            if text == "distinct":
                distinct = True
                pos += 1
            col, pos = self._column(pos, defaults)
            unit = ColUnit(AggOp.NONE, col, distinct)
        if is_block:
            pos = self._expect(pos, ")")
        return unit, pos

    def _column(self, pos: int, defaults: list[str]) -> tuple[ColumnName, int]:
        tok = self._tok(pos)
        if tok is None:
            raise SqlParseError("expected a column, found end of input")
        if tok.text == "*" and tok.kind is TokKind.PUNCT:
            return ColumnName(None, "*"), pos + 1
        if tok.kind is not TokKind.IDENT:
            raise SqlParseError(f"expected a column, found {tok.text!r}", tok.pos)
        if "." in tok.text:
            alias, col = tok.text.split(".", 1)
            table = self.aliases.get(alias)
            if table is None or table not in self.table_columns:
                raise SqlResolutionError(alias, "table", tok.pos)
            if col not in self.table_columns[table]:
                raise SqlResolutionError(tok.text, "column", tok.pos)
            return ColumnName(table, col), pos + 1
        for table in defaults:
            if tok.text in self.table_columns.get(table, ()):
                return ColumnName(table, tok.text), pos + 1
        raise SqlResolutionError(tok.text, "column", tok.pos)

    def _value(self, pos: int, defaults: list[str]):
        is_block = self._text(pos) == "("
        if is_block:
            pos += 1
        tok = self._tok(pos)
        if tok is None:
            raise SqlParseError("expected a value, found end of input")
        value: object
        if tok.kind is TokKind.STRING:
            value = StringValue(tok.text)
            pos += 1
        elif tok.kind is TokKind.NUMBER:
            value = NumberValue(float(tok.text), tok.text)
            pos += 1
        elif tok.kind is TokKind.IDENT and tok.text == "select":
            value, pos = self.statement(pos)
        else:
            value, pos = self._col_unit(pos, defaults)
        if is_block:
            pos = self._expect(pos, ")")
        return value, pos
