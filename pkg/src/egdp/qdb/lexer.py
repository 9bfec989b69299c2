"""Tokenizer shared by the database and query grammars."""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError

_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<comment>#[^\n]*)|(?P<name>[A-Za-z0-9_]+)|(?P<punct>[(){}\[\]<>;,:=])")


@dataclass(frozen=True)
class Token:
    kind: str  # "name", "punct" or "end"
    value: str
    line: int
    column: int

    def describe(self) -> str:
        if self.kind == "end":
            return "end of input"
        return f"'{self.value}'"


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens; ``#`` starts a comment running to end of line."""
    out = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "name":
            out.append(Token("name", value, line, col))
        elif kind == "punct":
            out.append(Token("punct", value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    out.append(Token("end", "", line, col))
    return out


class TokenStream:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        self.i = min(self.i + 1, len(self.tokens) - 1)
        return tok

    def at(self, value: str, ahead: int = 0) -> bool:
        tok = self.peek(ahead)
        return tok.kind != "end" and tok.value == value

    def accept(self, value: str) -> bool:
        if self.at(value):
            self.next()
            return True
        return False

    def fail(self, expected: str) -> ParseError:
        tok = self.peek()
        return ParseError(f"unexpected {tok.describe()}", tok.line, tok.column, expected)

    def expect(self, value: str) -> Token:
        if not self.at(value):
            raise self.fail(f"'{value}'")
        return self.next()

    def name(self, what: str = "a name") -> Token:
        tok = self.peek()
        if tok.kind != "name":
            raise self.fail(what)
        return self.next()

    def end(self) -> None:
        if self.peek().kind != "end":
            raise self.fail("end of input")
