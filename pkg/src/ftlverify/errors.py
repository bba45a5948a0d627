"""Exception hierarchy shared by the parser, translator and verifier."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SourcePosition:
    line: int
    col: int
    offset: int = 0

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


class FtlError(Exception):
    """Base class for user-facing errors that carry a source position."""

    def __init__(self, message: str, pos: SourcePosition | None = None):
        super().__init__(message)
        self.message = message
        self.pos = pos

    def report(self, filename: str = "<input>") -> str:
        if self.pos is None:
            return f"{filename}: error: {self.message}"
        return f"{filename}:{self.pos.line}:{self.pos.col}: error: {self.message}"


class IllegalCharacter(FtlError):
    pass


class ParseError(FtlError):
    """Raised with the first token that cannot be consumed."""

    def __init__(self, message: str, pos: SourcePosition | None = None,
                 expected: frozenset[str] = frozenset()):
        super().__init__(message, pos)
        self.expected = expected


class UnknownPattern(ParseError):
    def __init__(self, phrase: str, pos: SourcePosition | None = None,
                 expected: frozenset[str] = frozenset()):
        super().__init__(f"unknown noun phrase '{phrase}'", pos, expected)
        self.phrase = phrase


class PatternError(FtlError):
    pass


class DuplicatePattern(PatternError):
    pass


class AmbiguousPattern(PatternError):
    pass


class TranslationError(FtlError):
    pass


class UnboundVariable(TranslationError):
    def __init__(self, name: str, pos: SourcePosition | None = None):
        super().__init__(f"variable '{name}' is not bound or declared", pos)
        self.name = name


class InductionError(FtlError):
    pass


class BadInductionShape(InductionError):
    pass


class CyclicDefinition(FtlError):
    """Definition expansion did not terminate within its depth budget (a warning)."""


class BridgeError(Exception):
    pass


class UnencodableSymbol(BridgeError):
    pass


class SpawnFailure(BridgeError):
    pass
