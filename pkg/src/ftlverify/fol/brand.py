"""Brand's modification: equality elimination for an equality-free prover.

Clauses are first flattened so every literal has the shape ``P(x..)``,
``f(x..) = y`` or ``x = y``; then symmetry is compiled into all
orientations of positive equations and transitivity into the split
``t != z | s = z``. A reflexivity clause is the only axiom kept.
"""

from __future__ import annotations

import itertools

from .logic import Atom, Clause, Eq, Fn, Literal, NameSupply, Term, Var, make_clause

BRAND_PREDICATE = "brandEq"


def equality_predicate(clauses: list[Clause]) -> str:
    """``brandEq`` unless some clause already uses it, then ``brandEqN``."""
    used = {l.atom.pred for c in clauses for l in c.literals}
    if BRAND_PREDICATE not in used:
        return BRAND_PREDICATE
    return NameSupply(BRAND_PREDICATE, taken=used)()


class _Flattener:
    def __init__(self, clause: Clause):
        self.fresh = NameSupply("Z", taken=clause.variables())
        self.extra: list[Literal] = []

    def abstract(self, t: Term) -> Term:
        """Variable standing for ``t``; records ``f(..) != z``."""
        if isinstance(t, Var):
            return t
        z = Var(self.fresh())
        self.extra.append(Literal(False, Eq(self.shallow(t), z)))
        return z

    def shallow(self, t: Fn) -> Fn:
        return Fn(t.symbol, tuple(self.abstract(a) for a in t.args))

    def literal(self, lit: Literal) -> Literal:
        a = lit.atom
        if isinstance(a, Atom):
            return Literal(lit.positive, Atom(a.pred, tuple(self.abstract(t) for t in a.args)))
        lhs, rhs = a.lhs, a.rhs
        if isinstance(lhs, Var) and isinstance(rhs, Fn):
            lhs, rhs = rhs, lhs
        lhs = self.shallow(lhs) if isinstance(lhs, Fn) else lhs
        rhs = self.abstract(rhs)
        return Literal(lit.positive, Eq(lhs, rhs))


def flatten(clause: Clause) -> Clause:
    fl = _Flattener(clause)
    body = [fl.literal(l) for l in clause.literals]
    return make_clause(body + fl.extra, clause.source)


def brand_transform(clauses: list[Clause]) -> list[Clause]:
    """Equality-free clause set, satisfiable iff the input is with equality."""
    return [c for c, _ in brand_labeled([(c, None) for c in clauses])]


def brand_labeled(items: list[tuple[Clause, object]],
                  reflexivity_label: object = "reflexivity") -> list[tuple[Clause, object]]:
    """``brand_transform`` over (clause, label) pairs; each output keeps its source label."""
    clauses = [c for c, _ in items]
    pred = equality_predicate(clauses)
    reflexivity = Clause((Literal(True, Atom(pred, (Var("X1"), Var("X1")))),), "premise")
    if not any(c.has_equality() for c in clauses):
        return list(items) + [(reflexivity, reflexivity_label)]

    out: list[tuple[Clause, object]] = []
    seen: set[Clause] = set()
    for c, label in items:
        flat = flatten(c) if c.has_equality() or _has_compound_args(c) else c
        for variant in _modify(flat, pred):
            if variant not in seen:
                seen.add(variant)
                out.append((variant, label))
    out.append((reflexivity, reflexivity_label))
    return out


def _has_compound_args(c: Clause) -> bool:
    return any(isinstance(t, Fn) for l in c.literals for t in l.atom.args)


def _modify(c: Clause, pred: str) -> list[Clause]:
    """S- and T-modification of one flat clause."""
    fresh = NameSupply("W", taken=c.variables())
    choices: list[list[Literal]] = []
    for lit in c.literals:
        a = lit.atom
        if not isinstance(a, Eq):
            choices.append([lit])
        elif not lit.positive:
            choices.append([Literal(False, Atom(pred, (a.lhs, a.rhs)))])
        else:
            orientations = [(a.lhs, a.rhs)]
            if a.lhs != a.rhs:
                orientations.append((a.rhs, a.lhs))
            choices.append([("split", s, t) for s, t in orientations])
    out = []
    for combo in itertools.product(*choices):
        lits: list[Literal] = []
        for item in combo:
            if isinstance(item, Literal):
                lits.append(item)
            else:
                _, s, t = item
                z = Var(fresh())
                lits.append(Literal(False, Atom(pred, (t, z))))
                lits.append(Literal(True, Atom(pred, (s, z))))
        out.append(make_clause(lits, c.source))
    return out
