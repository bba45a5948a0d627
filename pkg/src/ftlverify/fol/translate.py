"""Transformational semantics: statement trees to first-order images.

Notion membership becomes a predicate whose first argument is the member;
every quantifier is relativized by the notion predicate of its phrase.
"""

from __future__ import annotations

from collections.abc import Collection

from ..errors import UnboundVariable
from ..syntax import ast
from ..syntax.vocab import Vocabulary
from .logic import (
    Atom, Eq, Exists, Fn, Forall, Formula, Iff, Implies, Not, Term, Var, conj, disj,
)


def translate_term(t: ast.Term) -> Term:
    if isinstance(t, ast.Var):
        return Var(t.name)
    return Fn(t.pattern.symbol, tuple(translate_term(a) for a in t.args))


def phrase_guard(phrase: ast.NotionPhrase, subject: Term) -> Formula:
    """``aN(subject, args) & adj1(subject) & ...`` for a notion phrase."""
    args = tuple(translate_term(a) for a in phrase.args)
    parts = [Atom(phrase.notion.symbol, (subject,) + args)]
    parts += [Atom(adj.symbol, (subject,)) for adj in phrase.adjectives]
    return conj(*parts)


def translate(stmt: ast.Statement, vocab: Vocabulary | None = None,
              free: Collection[str] | None = None) -> Formula:
    """First-order image of ``stmt``.

    With ``free`` given, any variable outside it that is not bound by a
    quantifier raises UnboundVariable; otherwise free variables are kept.
    """
    allowed = None if free is None else frozenset(free)

    def check(t: ast.Term, bound: frozenset[str]) -> Term:
        if allowed is not None:
            for name in ast.term_vars(t):
                if name not in bound and name not in allowed:
                    raise UnboundVariable(name)
        return translate_term(t)

    def go(s: ast.Statement, bound: frozenset[str]) -> Formula:
        if isinstance(s, ast.QuantifiedNotion):
            for a in s.phrase.args:
                check(a, bound)
            x = s.phrase.var
            guard = phrase_guard(s.phrase, Var(x))
            inner = bound | {x}
            if s.quantifier == "every":
                return Forall(x, Implies(guard, go(s.scope, inner)))
            body = guard if s.scope is None else conj(guard, go(s.scope, inner))
            if s.quantifier == "some":
                return Exists(x, body)
            return Not(Exists(x, body))
        if isinstance(s, ast.IsNotion):
            subject = check(s.subject, bound)
            for a in s.phrase.args:
                check(a, bound)
            return phrase_guard(s.phrase, subject)
        if isinstance(s, ast.HasAdjective):
            args = tuple(check(a, bound) for a in (s.subject,) + s.args)
            return Atom(s.adjective.symbol, args)
        if isinstance(s, ast.PredicateApp):
            return Atom(s.pattern.symbol, tuple(check(a, bound) for a in s.args))
        if isinstance(s, ast.Relation):
            lhs, rhs = check(s.lhs, bound), check(s.rhs, bound)
            if s.op == "=":
                return Eq(lhs, rhs)
            if s.op == "!=":
                return Not(Eq(lhs, rhs))
            return Atom(s.pattern.symbol, (lhs, rhs))
        if isinstance(s, ast.Not):
            return Not(go(s.arg, bound))
        if isinstance(s, ast.And):
            return conj(go(s.left, bound), go(s.right, bound))
        if isinstance(s, ast.Or):
            return disj(go(s.left, bound), go(s.right, bound))
        if isinstance(s, ast.Implies):
            return Implies(go(s.left, bound), go(s.right, bound))
        if isinstance(s, ast.Iff):
            return Iff(go(s.left, bound), go(s.right, bound))
        raise TypeError(f"not a statement: {s!r}")

    return go(stmt, frozenset())


def translate_definition(d: ast.Definition) -> Formula:
    """Universally closed ``head <=> body`` for a definition block."""
    head = translate(d.head)
    body = translate(d.body, free=d.params)
    f: Formula = Iff(head, body)
    for p in reversed(d.params):
        f = Forall(p, f)
    return f
