"""Tokenizer for the Spider SQL dialect."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class SqlParseError(ValueError):
    """Syntax error; carries the character position in the input."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SqlResolutionError(SqlParseError):
    """An identifier does not resolve against the schema."""

    def __init__(self, token: str, kind: str, position: int | None = None):
        self.token = token
        self.kind = kind  # "table" or "column"
        super().__init__(f"unknown {kind} {token!r}", position)


class TokKind(Enum):
    IDENT = "ident"
    NUMBER = "number"
    STRING = "string"
    OP = "op"
    PUNCT = "punct"


@dataclass(frozen=True)
class Token:
    kind: TokKind
    text: str  # lowercased except string contents
    pos: int


KEYWORDS = frozenset(
    {
        "select", "distinct", "from", "join", "on", "as", "where", "group",
        "by", "having", "order", "limit", "and", "or", "not", "in", "like",
        "between", "is", "exists", "intersect", "union", "except", "asc",
        "desc", "max", "min", "count", "sum", "avg",
    }
)

CLAUSE_STARTERS = frozenset(
    {"select", "from", "where", "group", "order", "limit", "intersect", "union", "except"}
)

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<str1>'[^']*')
    | (?P<str2>"[^"]*")
    | (?P<num>\d+\.\d+|\d+|\.\d+)
    | (?P<ident>[^\W\d]\w*(?:\.(?:[^\W\d]\w*|\*))?)
    | (?P<op>!=|<=|>=|=|<|>)
    | (?P<punct>[(),;*+\-/])
    """,
    re.VERBOSE | re.UNICODE,
)


def tokenize_sql(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            ch = text[pos]
            if ch in "'\"":
                raise SqlParseError("unterminated string literal", pos)
            raise SqlParseError(f"unexpected character {ch!r}", pos)
        if match.lastgroup == "ws":
            pos = match.end()
            continue
        raw = match.group()
        if match.lastgroup in ("str1", "str2"):
            tokens.append(Token(TokKind.STRING, raw[1:-1], pos))
        elif match.lastgroup == "num":
            tokens.append(Token(TokKind.NUMBER, raw, pos))
        elif match.lastgroup == "ident":
            tokens.append(Token(TokKind.IDENT, raw.lower(), pos))
        elif match.lastgroup == "op":
            tokens.append(Token(TokKind.OP, raw, pos))
        else:
            tokens.append(Token(TokKind.PUNCT, raw, pos))
        pos = match.end()
    return tokens


def string_literals(text: str) -> list[str]:
    """Quoted string contents in ``text``, in order; tolerant of syntax errors."""
    out = []
    for match in re.finditer(r"'([^']*)'|\"([^\"]*)\"", text):
        out.append(match.group(1) if match.group(1) is not None else match.group(2))
    return out
