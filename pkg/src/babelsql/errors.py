"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: usage errors exit 1, ``DataError`` exits 2,
``BackendError`` exits 3.
"""

from __future__ import annotations


class BabelSqlError(Exception):
    """Base class for all toolkit errors."""


class DataError(BabelSqlError):
    """Malformed or inconsistent input data."""


class SchemaFileError(DataError):
    """A schema (tables) file could not be parsed or violates invariants."""

    def __init__(self, message: str, path: str | None = None, offset: int | None = None):
        self.path = path
        self.offset = offset
        where = []
        if path:
            where.append(path)
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class DatasetFileError(DataError):
    """An examples file could not be loaded against its schema collection."""

    def __init__(self, message: str, example_ids: list[str] | None = None):
        self.example_ids = example_ids or []
        if self.example_ids:
            message = f"{message}: {', '.join(self.example_ids)}"
        super().__init__(message)


class BackendError(BabelSqlError):
    """A translation or entailment backend failed."""

    retryable = False


class BackendUnavailableError(BackendError):
    """Backend not reachable; the request may be retried."""

    retryable = True


class BackendProtocolError(BackendError):
    """Backend answered with a malformed or out-of-contract response."""


class FixtureMissError(BackendError):
    """A fixture backend has no mapping for the request."""
