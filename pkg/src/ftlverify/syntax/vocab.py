"""Pattern vocabulary: notions, predicates and functions introduced by a text.

A vocabulary is an immutable value; registration returns an extended copy.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING

from ..errors import AmbiguousPattern, DuplicatePattern, PatternError

if TYPE_CHECKING:
    from .ast import NotionPhrase

SLOT = "?"

NOTION, PREDICATE, FUNCTION = "notion", "predicate", "function"

QUANTIFIERS = {
    "every": "every", "each": "every", "all": "every", "any": "every",
    "some": "some", "a": "some", "an": "some", "no": "no",
}
RESERVED_WORDS = frozenset({
    "and", "or", "iff", "implies", "if", "then", "not", "but", "for",
    "there", "such", "every", "each", "all", "any", "some", "no",
})


@dataclass(frozen=True)
class Pattern:
    """A registered phrase shape.

    Notion shapes omit the subject slot (it is implicit); predicate shapes
    always begin with the subject slot.
    """

    kind: str
    shape: tuple[str, ...]
    symbol: str
    plural: tuple[str, ...] | None = None
    adjective: bool = False

    @property
    def slots(self) -> int:
        return sum(1 for item in self.shape if item == SLOT)

    @property
    def arity(self) -> int:
        return self.slots + (1 if self.kind == NOTION else 0)

    @property
    def forms(self) -> tuple[tuple[str, ...], ...]:
        return (self.shape,) if self.plural is None else (self.shape, self.plural)

    @property
    def infix(self) -> bool:
        return (len(self.shape) == 3 and self.shape[0] == SLOT and self.shape[2] == SLOT
                and not self.shape[1][0].isalpha())

    @property
    def adjective_words(self) -> tuple[str, ...] | None:
        """Words usable before a noun, for slotless adjectives ("prime")."""
        if self.adjective and self.slots == 1:
            return self.shape[2:]
        return None

    def describe(self) -> str:
        return " ".join(self.shape)


def _camel(words: list[str], capitalize_first: bool) -> str:
    parts = []
    for k, w in enumerate(words):
        chunks = [c for c in w.replace("'", "").split("-") if c]
        for m, c in enumerate(chunks):
            first = k == 0 and m == 0
            parts.append(c.capitalize() if (capitalize_first or not first) else c.lower())
    return "".join(parts)


def make_symbol(kind: str, shape: tuple[str, ...]) -> str:
    literals = [item for item in shape if item != SLOT]
    if kind == NOTION:
        return "a" + _camel(literals, capitalize_first=True)
    if len(literals) == 1 and not literals[0][0].isalpha():
        return literals[0]
    if kind == FUNCTION and literals and literals[0] == "the":
        literals = literals[1:]
    return _camel(literals, capitalize_first=False)


def make_pattern(kind: str, shape: tuple[str, ...], plural: tuple[str, ...] | None = None,
                 adjective: bool = False) -> Pattern:
    if not shape:
        raise PatternError("empty pattern shape")
    if kind == PREDICATE and shape[0] != SLOT:
        raise PatternError(f"predicate '{' '.join(shape)}' must start with its subject")
    for form in (shape, plural or ()):
        for item in form:
            if item.lower() in RESERVED_WORDS:
                raise PatternError(f"reserved word '{item}' in pattern '{' '.join(form)}'")
    if plural is not None and sum(i == SLOT for i in plural) != sum(i == SLOT for i in shape):
        raise PatternError("singular and plural forms differ in their arguments")
    return Pattern(kind, tuple(shape), make_symbol(kind, shape), plural, adjective)


def _starts_term(vocab: "Vocabulary", word: str) -> bool:
    if word in QUANTIFIERS or word == "(":
        return True
    return any(p.kind == FUNCTION and p.shape[0] == word for p in vocab.patterns)


def _category(p: Pattern) -> str:
    if p.kind == PREDICATE:
        return "tail"
    if p.kind == FUNCTION:
        return "infix" if p.shape[0] == SLOT else "term"
    return NOTION


def _tails(p: Pattern) -> tuple[tuple[str, ...], ...]:
    if p.kind == PREDICATE:
        return (p.shape[1:],)
    return p.forms


def _forms_overlap(vocab: "Vocabulary", a: tuple[str, ...], b: tuple[str, ...]) -> bool:
    if len(a) != len(b):
        return False
    for x, y in zip(a, b):
        if x == y:
            continue
        if x == SLOT and y != SLOT and _starts_term(vocab, y):
            continue
        if y == SLOT and x != SLOT and _starts_term(vocab, x):
            continue
        return False
    return True


@dataclass(frozen=True)
class Vocabulary:
    patterns: tuple[Pattern, ...] = ()
    typing: tuple[tuple[str, "NotionPhrase"], ...] = ()
    transitive: frozenset[str] = frozenset()
    well_founded: tuple[str, ...] = ()
    _by_symbol: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        self._by_symbol.update({p.symbol: p for p in self.patterns})

    def of_kind(self, kind: str) -> list[Pattern]:
        return [p for p in self.patterns if p.kind == kind]

    def by_symbol(self, symbol: str) -> Pattern | None:
        return self._by_symbol.get(symbol)

    def type_of(self, var: str) -> "NotionPhrase | None":
        for name, phrase in reversed(self.typing):
            if name == var:
                return phrase
        return None

    def register(self, pattern: Pattern) -> "Vocabulary":
        for old in self.patterns:
            if old.kind == pattern.kind and set(old.forms) & set(pattern.forms):
                raise DuplicatePattern(f"{pattern.kind} '{pattern.describe()}' is already declared")
        clash = self.by_symbol(pattern.symbol)
        if clash is not None:
            raise AmbiguousPattern(
                f"'{pattern.describe()}' and '{clash.describe()}' both name symbol {pattern.symbol}")
        self._check_ambiguity(pattern)
        return replace(self, patterns=self.patterns + (pattern,), _by_symbol={})

    def _check_ambiguity(self, new: Pattern) -> None:
        for old in self.patterns:
            if _category(old) == _category(new):
                for a in _tails(old):
                    for b in _tails(new):
                        if _forms_overlap(self, a, b):
                            raise AmbiguousPattern(
                                f"'{new.describe()}' is ambiguous with '{old.describe()}'")
            # a prenominal adjective must not be the start of a notion name
            for adj, notion in ((old, new), (new, old)):
                words = adj.adjective_words
                if words and notion.kind == NOTION:
                    for form in notion.forms:
                        if form[:len(words)] == words:
                            raise AmbiguousPattern(
                                f"'{new.describe()}' is ambiguous with '{old.describe()}'")

    def declare(self, var: str, phrase: "NotionPhrase") -> "Vocabulary":
        return replace(self, typing=self.typing + ((var, phrase),), _by_symbol={})

    def mark(self, symbol: str, transitive: bool = False, well_founded: bool = False) -> "Vocabulary":
        trans = self.transitive | {symbol} if transitive else self.transitive
        wf = self.well_founded
        if well_founded and symbol not in wf:
            wf = wf + (symbol,)
        return replace(self, transitive=trans, well_founded=wf, _by_symbol={})


def register_pattern(vocab: Vocabulary, pattern: Pattern) -> Vocabulary:
    """Return ``vocab`` extended with ``pattern``.

    Raises DuplicatePattern for a repeated kind+shape and AmbiguousPattern
    when the new shape could match the same phrase as an existing one.
    """
    return vocab.register(pattern)
