"""Database schema types and Spider-format ``tables.json`` ingestion.

Schemas carry both the original identifier (used inside SQL) and a localized
display name (what a parser or annotator sees). SQL always references
``original_name``; questions and augmentation operate on ``display_name``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable

from .errors import SchemaFileError

_IDENT_RE = re.compile(r"^\w+$", re.UNICODE)


class ColumnType(str, Enum):
    TEXT = "text"
    NUMBER = "number"
    TIME = "time"
    BOOLEAN = "boolean"
    OTHERS = "others"

    @classmethod
    def parse(cls, raw: str) -> "ColumnType":
        try:
            return cls(raw.strip().lower())
        except ValueError:
            raise ValueError(f"unknown column type: {raw!r}") from None


@dataclass(frozen=True)
class ColumnDef:
    original_name: str
    display_name: str
    col_type: ColumnType


@dataclass(frozen=True)
class TableDef:
    original_name: str
    display_name: str
    columns: tuple[ColumnDef, ...]

    def column(self, original_name: str) -> ColumnDef | None:
        want = original_name.lower()
        for col in self.columns:
            if col.original_name.lower() == want:
                return col
        return None


@dataclass(frozen=True)
class ColumnRef:
    """A column addressed by table / column original names (lowercased)."""

    table: str
    column: str

    def key(self) -> str:
        return f"{self.table}.{self.column}"


@dataclass(frozen=True)
class DatabaseSchema:
    db_id: str
    tables: tuple[TableDef, ...]
    primary_keys: tuple[ColumnRef, ...] = ()
    foreign_keys: tuple[tuple[ColumnRef, ColumnRef], ...] = ()

    def __post_init__(self) -> None:
        if not self.db_id.strip():
            raise SchemaFileError("db_id is empty")
        seen_tables: set[str] = set()
        for table in self.tables:
            if not table.original_name.strip() or not _IDENT_RE.match(table.original_name):
                raise SchemaFileError(
                    f"table name {table.original_name!r} is not a valid identifier "
                    f"(db {self.db_id})"
                )
            if not table.display_name.strip():
                raise SchemaFileError(
                    f"table {table.original_name!r} has an empty display name (db {self.db_id})"
                )
            low = table.original_name.lower()
            if low in seen_tables:
                raise SchemaFileError(f"duplicate table {low!r} in db {self.db_id}")
            seen_tables.add(low)
            seen_cols: set[str] = set()
            for col in table.columns:
                if not col.original_name.strip() or not _IDENT_RE.match(col.original_name):
                    raise SchemaFileError(
                        f"column name {col.original_name!r} is not a valid identifier "
                        f"(db {self.db_id}, table {table.original_name})"
                    )
                if not col.display_name.strip():
                    raise SchemaFileError(
                        f"column {table.original_name}.{col.original_name} has an empty "
                        f"display name (db {self.db_id})"
                    )
                clow = col.original_name.lower()
                if clow in seen_cols:
                    raise SchemaFileError(
                        f"duplicate column {clow!r} in table {table.original_name} "
                        f"(db {self.db_id})"
                    )
                seen_cols.add(clow)
        for ref in self.primary_keys:
            self._require(ref)
        for left, right in self.foreign_keys:
            self._require(left)
            self._require(right)

    def _require(self, ref: ColumnRef) -> None:
        if self.resolve_column(ref.table, ref.column) is None:
            raise SchemaFileError(f"key column {ref.key()!r} not in schema (db {self.db_id})")

    # -- lookup helpers -----------------------------------------------------

    def table(self, original_name: str) -> TableDef | None:
        want = original_name.lower()
        for table in self.tables:
            if table.original_name.lower() == want:
                return table
        return None

    def resolve_column(self, table: str, column: str) -> ColumnDef | None:
        tab = self.table(table)
        return tab.column(column) if tab is not None else None

    def tables_with_column(self, column: str) -> list[str]:
        want = column.lower()
        return [
            t.original_name.lower()
            for t in self.tables
            if any(c.original_name.lower() == want for c in t.columns)
        ]

    def column_refs(self) -> list[ColumnRef]:
        return [
            ColumnRef(t.original_name.lower(), c.original_name.lower())
            for t in self.tables
            for c in t.columns
        ]

    def foreign_key_groups(self) -> dict[ColumnRef, ColumnRef]:
        """Map each foreign-key-connected column to its group representative.

        Columns linked (transitively) by foreign keys form a group; the
        representative is the lexically smallest member, so two queries that
        join through either end of a key compare equal.
        """
        groups: list[set[ColumnRef]] = []
        for left, right in self.foreign_keys:
            home = None
            for group in groups:
                if left in group or right in group:
                    home = group
                    break
            if home is None:
                home = set()
                groups.append(home)
            home.add(left)
            home.add(right)
        mapping: dict[ColumnRef, ColumnRef] = {}
        for group in groups:
            rep = min(group, key=lambda ref: ref.key())
            for ref in group:
                mapping[ref] = rep
        return mapping


# -- Spider tables.json ingestion -------------------------------------------


def load_schemas(path: str | Path) -> dict[str, DatabaseSchema]:
    """Load a Spider-format tables file into a ``db_id -> schema`` map."""
    path = Path(path)
    raw = path.read_text(encoding="utf-8")
    try:
        entries = json.loads(raw)
    except json.JSONDecodeError as exc:
        offset = len(raw[: exc.pos].encode("utf-8"))
        raise SchemaFileError(f"invalid JSON: {exc.msg}", path=str(path), offset=offset) from exc
    if not isinstance(entries, list):
        raise SchemaFileError("tables file must be a JSON array", path=str(path))
    schemas: dict[str, DatabaseSchema] = {}
    for i, entry in enumerate(entries):
        try:
            schema = schema_from_spider_entry(entry)
        except SchemaFileError as exc:
            raise SchemaFileError(f"entry {i}: {exc}", path=str(path)) from exc
        if schema.db_id in schemas:
            raise SchemaFileError(f"duplicate db_id {schema.db_id!r}", path=str(path))
        schemas[schema.db_id] = schema
    return schemas


def schema_from_spider_entry(entry: dict) -> DatabaseSchema:
    """Build a :class:`DatabaseSchema` from one Spider tables entry."""
    if not isinstance(entry, dict):
        raise SchemaFileError("schema entry is not an object")
    try:
        db_id = entry["db_id"]
        table_names_orig = entry["table_names_original"]
        column_names_orig = entry["column_names_original"]
        column_types = entry["column_types"]
    except KeyError as exc:
        raise SchemaFileError(f"missing key {exc.args[0]!r}") from None
    table_names = entry.get("table_names", table_names_orig)
    column_names = entry.get("column_names", column_names_orig)
    if len(table_names) != len(table_names_orig):
        raise SchemaFileError(f"table name lists disagree in length (db {db_id})")
    if len(column_names) != len(column_names_orig) or len(column_types) != len(column_names_orig):
        raise SchemaFileError(f"column lists disagree in length (db {db_id})")

    columns_by_table: dict[int, list[ColumnDef]] = {i: [] for i in range(len(table_names_orig))}
    for (t_idx, col_orig), (_, col_disp), col_type in zip(
        column_names_orig, column_names, column_types
    ):
        if t_idx == -1:
            continue  # index 0 is the '*' pseudo-column
        if t_idx < 0 or t_idx >= len(table_names_orig):
            raise SchemaFileError(
                f"column {col_orig!r} references table index {t_idx} out of range (db {db_id})"
            )
        columns_by_table[t_idx].append(
            ColumnDef(str(col_orig), str(col_disp), ColumnType.parse(str(col_type)))
        )

    tables = tuple(
        TableDef(str(orig), str(disp), tuple(columns_by_table[i]))
        for i, (orig, disp) in enumerate(zip(table_names_orig, table_names))
    )

    def col_ref(index: int) -> ColumnRef:
        if index <= 0 or index >= len(column_names_orig):
            raise SchemaFileError(f"key references column index {index} out of range (db {db_id})")
        t_idx, col = column_names_orig[index]
        return ColumnRef(str(table_names_orig[t_idx]).lower(), str(col).lower())

    primary = tuple(col_ref(i) for i in entry.get("primary_keys", []))
    foreign = tuple((col_ref(a), col_ref(b)) for a, b in entry.get("foreign_keys", []))
    return DatabaseSchema(str(db_id), tables, primary, foreign)


def schema_to_spider_entry(schema: DatabaseSchema) -> dict:
    """Inverse of :func:`schema_from_spider_entry` (round-trips losslessly)."""
    table_names_orig = [t.original_name for t in schema.tables]
    table_names = [t.display_name for t in schema.tables]
    column_names_orig: list[list] = [[-1, "*"]]
    column_names: list[list] = [[-1, "*"]]
    column_types: list[str] = ["text"]
    index_of: dict[str, int] = {}
    for t_idx, table in enumerate(schema.tables):
        for col in table.columns:
            index_of[f"{table.original_name.lower()}.{col.original_name.lower()}"] = len(
                column_names_orig
            )
            column_names_orig.append([t_idx, col.original_name])
            column_names.append([t_idx, col.display_name])
            column_types.append(col.col_type.value)
    return {
        "db_id": schema.db_id,
        "table_names": table_names,
        "table_names_original": table_names_orig,
        "column_names": column_names,
        "column_names_original": column_names_orig,
        "column_types": column_types,
        "primary_keys": [index_of[ref.key()] for ref in schema.primary_keys],
        "foreign_keys": [[index_of[a.key()], index_of[b.key()]] for a, b in schema.foreign_keys],
    }


def emit_schemas(schemas: Iterable[DatabaseSchema], path: str | Path) -> None:
    entries = [schema_to_spider_entry(s) for s in schemas]
    Path(path).write_text(
        json.dumps(entries, ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
    )
