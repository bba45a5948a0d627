"""Statement and document trees produced by the parser.

Source positions never take part in equality, so a reprinted and reparsed
text compares equal to the original parse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..errors import SourcePosition
from .vocab import Pattern, Vocabulary


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class FnApp:
    pattern: Pattern
    args: tuple["Term", ...] = ()


Term = Union[Var, FnApp]


@dataclass(frozen=True)
class NotionPhrase:
    notion: Pattern
    args: tuple[Term, ...] = ()
    adjectives: tuple[Pattern, ...] = ()
    var: str | None = None


@dataclass(frozen=True)
class QuantifiedNotion:
    quantifier: str          # every | some | no
    phrase: NotionPhrase     # phrase.var is the bound variable
    scope: "Statement | None"


@dataclass(frozen=True)
class PredicateApp:
    pattern: Pattern
    args: tuple[Term, ...]


@dataclass(frozen=True)
class IsNotion:
    subject: Term
    phrase: NotionPhrase


@dataclass(frozen=True)
class HasAdjective:
    subject: Term
    adjective: Pattern
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Relation:
    """Symbolic atom ``lhs op rhs``; ``pattern`` is None for = and !=."""

    op: str
    lhs: Term
    rhs: Term
    pattern: Pattern | None = None


@dataclass(frozen=True)
class And:
    left: "Statement"
    right: "Statement"


@dataclass(frozen=True)
class Or:
    left: "Statement"
    right: "Statement"


@dataclass(frozen=True)
class Implies:
    left: "Statement"
    right: "Statement"


@dataclass(frozen=True)
class Iff:
    left: "Statement"
    right: "Statement"


@dataclass(frozen=True)
class Not:
    arg: "Statement"


Statement = Union[QuantifiedNotion, PredicateApp, IsNotion, HasAdjective, Relation,
                  And, Or, Implies, Iff, Not]


# -- blocks -------------------------------------------------------------------

@dataclass(frozen=True)
class PatternDecl:
    pattern: Pattern
    transitive: bool = False
    well_founded: bool = False


@dataclass(frozen=True)
class LetDecl:
    variables: tuple[str, ...]
    phrase: NotionPhrase


@dataclass(frozen=True)
class Signature:
    items: tuple[PatternDecl | LetDecl, ...]
    pos: SourcePosition | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Definition:
    pattern: Pattern
    params: tuple[str, ...]
    body: Statement
    pos: SourcePosition | None = field(default=None, compare=False)

    @property
    def head(self) -> Statement:
        args = tuple(Var(p) for p in self.params)
        if self.pattern.kind == "notion":
            return IsNotion(args[0], NotionPhrase(self.pattern, args[1:]))
        if self.pattern.adjective:
            return HasAdjective(args[0], self.pattern, args[1:])
        if self.pattern.infix:
            return Relation(self.pattern.shape[1], args[0], args[1], self.pattern)
        return PredicateApp(self.pattern, args)


@dataclass(frozen=True)
class Axiom:
    statement: Statement
    pos: SourcePosition | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Step:
    statement: Statement
    pos: SourcePosition | None = field(default=None, compare=False)
    proof: "ProofBlock | None" = None


@dataclass(frozen=True)
class CaseBlock:
    hypothesis: Statement
    steps: tuple["Step | CaseBlock", ...]
    pos: SourcePosition | None = field(default=None, compare=False)


@dataclass(frozen=True)
class ProofBlock:
    steps: tuple[Step | CaseBlock, ...]
    induction: bool = False
    pos: SourcePosition | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Claim:
    kind: str                 # theorem | lemma | proposition
    statement: Statement
    proof: ProofBlock | None = None
    pos: SourcePosition | None = field(default=None, compare=False)


Block = Union[Signature, Definition, Axiom, Claim]


@dataclass(frozen=True)
class Document:
    blocks: tuple[Block, ...]
    vocab: Vocabulary = field(default_factory=Vocabulary, compare=False)


# -- helpers ------------------------------------------------------------------

def term_vars(t: Term) -> list[str]:
    if isinstance(t, Var):
        return [t.name]
    out: list[str] = []
    for a in t.args:
        out.extend(term_vars(a))
    return out


def free_variables(s: Statement) -> list[str]:
    """Free variable names of ``s`` in order of first occurrence."""
    seen: list[str] = []

    def add(names, bound):
        for n in names:
            if n not in bound and n not in seen:
                seen.append(n)

    def phrase_vars(p: NotionPhrase):
        out = []
        for a in p.args:
            out.extend(term_vars(a))
        return out

    def walk(node, bound: frozenset[str]):
        if isinstance(node, QuantifiedNotion):
            add(phrase_vars(node.phrase), bound)
            if node.scope is not None:
                walk(node.scope, bound | {node.phrase.var})
        elif isinstance(node, PredicateApp):
            for a in node.args:
                add(term_vars(a), bound)
        elif isinstance(node, IsNotion):
            add(term_vars(node.subject), bound)
            add(phrase_vars(node.phrase), bound)
        elif isinstance(node, HasAdjective):
            add(term_vars(node.subject), bound)
            for a in node.args:
                add(term_vars(a), bound)
        elif isinstance(node, Relation):
            add(term_vars(node.lhs), bound)
            add(term_vars(node.rhs), bound)
        elif isinstance(node, Not):
            walk(node.arg, bound)
        else:
            walk(node.left, bound)
            walk(node.right, bound)

    walk(s, frozenset())
    return seen
