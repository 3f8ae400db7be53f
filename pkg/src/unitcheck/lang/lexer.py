"""Tokenizer for UDL source text."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError
from .ast import Pos

KEYWORDS = frozenset({"dim", "unit", "base", "const", "let", "print", "in", "sqrt", "pow"})

PUNCT = {
    "*": "star",
    "/": "slash",
    "+": "plus",
    "-": "minus",
    "^": "caret",
    "(": "lparen",
    ")": "rparen",
    ",": "comma",
    ":": "colon",
    ";": "semi",
    "=": "eq",
    "@": "at",
}

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_SPACE = re.compile(r"[ \t\r\n]+|#[^\n]*")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "number", "eof", a keyword, or a PUNCT name
    text: str
    pos: Pos
    start: int
    end: int

    @property
    def is_int(self) -> bool:
        return self.kind == "number" and self.text.isdigit()

    def __repr__(self) -> str:
        if self.kind in ("ident", "number"):
            return f"{self.kind} {self.text}"
        return self.kind


def lex(source: str, diagnostics: list | None = None) -> list[Token]:
    """Split ``source`` into tokens, ending with an ``eof`` token.

    Bad characters and malformed numbers raise :class:`ParseError`, or are
    recorded in ``diagnostics`` and skipped when a list is supplied.
    """
    tokens: list[Token] = []
    i, line, line_start = 0, 1, 0
    n = len(source)

    def fail(msg: str, at: int) -> None:
        err = ParseError(msg, Pos(line, at - line_start + 1))
        if diagnostics is None:
            raise err
        diagnostics.append(err)

    while i < n:
        m = _SPACE.match(source, i)
        if m:
            for j in range(i, m.end()):
                if source[j] == "\n":
                    line += 1
                    line_start = j + 1
            i = m.end()
            continue
        pos = Pos(line, i - line_start + 1)
        ch = source[i]
        m = _NUMBER.match(source, i)
        if m:
            end = m.end()
            if end < n and (source[end].isalnum() or source[end] in "._"):
                # swallow the rest of the bad literal so we report it once
                bad = re.compile(r"[A-Za-z0-9_.]*").match(source, end).end()
                fail(f"malformed number {source[i:bad]!r}", i)
                i = bad
                continue
            tokens.append(Token("number", m.group(), pos, i, end))
            i = end
            continue
        m = _IDENT.match(source, i)
        if m:
            word = m.group()
            kind = word if word in KEYWORDS else "ident"
            tokens.append(Token(kind, word, pos, i, m.end()))
            i = m.end()
            continue
        if ch in PUNCT:
            tokens.append(Token(PUNCT[ch], ch, pos, i, i + 1))
            i += 1
            continue
        fail(f"illegal character {ch!r}", i)
        i += 1
    tokens.append(Token("eof", "", Pos(line, i - line_start + 1), n, n))
    return tokens
