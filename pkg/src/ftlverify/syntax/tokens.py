"""Tokenizer for ForTheL-like source text."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from ..errors import IllegalCharacter, SourcePosition


class Kind(str, Enum):
    WORD = "word"
    VARIABLE = "variable"
    SYMBOL = "symbol"
    PERIOD = "period"
    COMMA = "comma"
    KEYWORD = "block-keyword"


BLOCK_KEYWORDS = frozenset({
    "Signature", "Definition", "Axiom", "Theorem", "Lemma", "Proposition",
    "Proof", "Case", "end",
})

_WORD = re.compile(r"[A-Za-z]+(?:-[A-Za-z]+)*[0-9]*'*")
_VARIABLE = re.compile(r"[A-Za-z][0-9]*'*")
_OPERATOR = re.compile(r"[<>=!+*\-/|&^~@:;]+")
_NUMBER = re.compile(r"[0-9]+")
_SPACE = re.compile(r"[ \t\r\n\f]+")


@dataclass(frozen=True)
class Token:
    kind: Kind
    text: str
    pos: SourcePosition

    @property
    def lower(self) -> str:
        return self.text.lower()

    @property
    def end(self) -> int:
        return self.pos.offset + len(self.text)

    def __repr__(self) -> str:
        return f"[{self.kind.value} {self.text}]"


def classify_word(text: str) -> Kind:
    if text in BLOCK_KEYWORDS:
        return Kind.KEYWORD
    if text not in ("a", "A") and _VARIABLE.fullmatch(text):
        return Kind.VARIABLE
    return Kind.WORD


def tokenize(source: str) -> list[Token]:
    """Split ``source`` into tokens.

    Lines whose first non-blank character is ``#`` are comments. Any
    character outside the alphabet raises :class:`IllegalCharacter`.
    """
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)
    at_line_start = True

    def advance(text: str) -> None:
        nonlocal line, col
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)

    while i < n:
        ch = source[i]
        m = _SPACE.match(source, i)
        if m:
            text = m.group()
            if "\n" in text:
                at_line_start = True
            advance(text)
            i = m.end()
            continue
        if ch == "#" and at_line_start:
            j = source.find("\n", i)
            j = n if j < 0 else j
            advance(source[i:j])
            i = j
            continue
        at_line_start = False
        pos = SourcePosition(line, col, i)
        if ch == ".":
            tok = Token(Kind.PERIOD, ".", pos)
        elif ch == ",":
            tok = Token(Kind.COMMA, ",", pos)
        elif ch in "()":
            tok = Token(Kind.SYMBOL, ch, pos)
        elif (m := _WORD.match(source, i)):
            tok = Token(classify_word(m.group()), m.group(), pos)
        elif (m := _NUMBER.match(source, i)) or (m := _OPERATOR.match(source, i)):
            tok = Token(Kind.SYMBOL, m.group(), pos)
        else:
            raise IllegalCharacter(f"illegal character {ch!r}", pos)
        tokens.append(tok)
        advance(tok.text)
        i += len(tok.text)
    return tokens


def detokenize(source: str, tokens: list[Token]) -> str:
    """Rebuild the source from tokens plus the whitespace/comments between them."""
    out, last = [], 0
    for tok in tokens:
        out.append(source[last:tok.pos.offset])
        out.append(tok.text)
        last = tok.end
    out.append(source[last:])
    return "".join(out)
