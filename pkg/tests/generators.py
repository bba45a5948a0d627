"""Random formulas, terms and clause sets for the property tests.

Each generator takes a ``random.Random`` so that seeded runs are
reproducible; ``hypothesis`` strategies wrap the same generators through
``st.randoms``.
"""

from __future__ import annotations

import random

from hypothesis import strategies as st

from ftlverify.fol.logic import (
    And, Atom, Clause, Eq, Exists, Fn, Forall, Iff, Implies, Literal, Not, Or, Var,
    make_clause,
)

PREDICATES = {"p": 1, "q": 2}
FUNCTIONS = {"f": 1, "c": 0}
VARIABLES = ("x", "y", "z")


def term(rng: random.Random, scope: tuple[str, ...], depth: int = 2):
    if scope and (depth == 0 or rng.random() < 0.5):
        return Var(rng.choice(scope))
    if depth == 0 or rng.random() < 0.4:
        return Fn("c")
    return Fn("f", (term(rng, scope, depth - 1),))


def atom(rng: random.Random, scope: tuple[str, ...], eq: bool = False):
    if eq and rng.random() < 0.25:
        return Eq(term(rng, scope, 1), term(rng, scope, 1))
    pred = rng.choice(sorted(PREDICATES))
    return Atom(pred, tuple(term(rng, scope, 1) for _ in range(PREDICATES[pred])))


def formula(rng: random.Random, depth: int = 4, scope: tuple[str, ...] = (),
            eq: bool = False):
    """A formula of nesting depth at most ``depth`` over p/1, q/2, f/1, c."""
    if depth == 0 or rng.random() < 0.2:
        return atom(rng, scope, eq)
    kind = rng.choice(["not", "and", "or", "imp", "iff", "all", "ex", "all", "ex"])
    d = depth - 1
    if kind == "not":
        return Not(formula(rng, d, scope, eq))
    if kind in ("and", "or"):
        parts = (formula(rng, d, scope, eq), formula(rng, d, scope, eq))
        return And(parts) if kind == "and" else Or(parts)
    if kind == "imp":
        return Implies(formula(rng, d, scope, eq), formula(rng, d, scope, eq))
    if kind == "iff":
        return Iff(formula(rng, d, scope, eq), formula(rng, d, scope, eq))
    v = rng.choice(VARIABLES)
    body = formula(rng, d, scope + (v,), eq)
    return Forall(v, body) if kind == "all" else Exists(v, body)


def formulas(depth: int = 4, eq: bool = False):
    """Closed formulas; only bound variables ever occur."""
    return st.randoms(use_true_random=False).map(lambda r: formula(r, depth, (), eq))


# -- clause sets ----------------------------------------------------------------

def propositional_clauses(rng: random.Random, atoms: int = 8, max_clauses: int = 14,
                          max_width: int = 3) -> list[Clause]:
    names = [f"p{i}" for i in range(1, rng.randint(1, atoms) + 1)]
    out = []
    for _ in range(rng.randint(1, max_clauses)):
        width = rng.randint(1, max_width)
        lits = [Literal(rng.random() < 0.5, Atom(rng.choice(names))) for _ in range(width)]
        out.append(make_clause(lits))
    return out


POSITIVE = 0.7       # chance that an equality-set literal is positive
CONFLICT = 0.4       # chance of appending a congruence conflict


def equality_clauses(rng: random.Random) -> list[Clause]:
    """Small clause sets mixing p/1, q/2 with equations over f/1, g/2 and a few constants."""
    consts = [Fn(n) for n in ("a", "b", "c")]

    def t(depth: int, scope):
        r = rng.random()
        if scope and r < 0.3:
            return Var(rng.choice(scope))
        if depth == 0 or r < 0.6:
            return rng.choice(consts)
        if rng.random() < 0.6:
            return Fn("f", (t(depth - 1, scope),))
        return Fn("g", (t(depth - 1, scope), t(depth - 1, scope)))

    out = []
    for _ in range(rng.randint(2, 5)):
        scope = ("x",) if rng.random() < 0.3 else ()
        lits = []
        for _ in range(rng.randint(1, 2)):
            r = rng.random()
            if r < 0.5:
                a = Eq(t(2, scope), t(2, scope))
            elif r < 0.8:
                a = Atom("p", (t(2, scope),))
            else:
                a = Atom("q", (t(1, scope), t(1, scope)))
            lits.append(Literal(rng.random() < POSITIVE, a))
        out.append(make_clause(lits))
    if not any(c.has_equality() for c in out):
        out.append(make_clause([Literal(True, Eq(consts[0], Fn("f", (consts[1],))))]))
    if rng.random() < CONFLICT:
        # p(s) and ~p(s') where s' swaps one constant for an equal one
        c, d = rng.sample(consts, 2)
        s = Fn("f", (c,)) if rng.random() < 0.5 else Fn("g", (c, rng.choice(consts)))
        s2 = Fn(s.symbol, (d,) + s.args[1:])
        out += [make_clause([Literal(True, Eq(c, d))]),
                make_clause([Literal(True, Atom("p", (s,)))]),
                make_clause([Literal(False, Atom("p", (s2,)))])]
    return out


# -- unification ------------------------------------------------------------------

def unif_term(rng: random.Random, depth: int = 3):
    r = rng.random()
    if depth == 0 or r < 0.35:
        return Var(rng.choice(("X", "Y", "Z")))
    if r < 0.5:
        return Fn(rng.choice(("a", "b")))
    if rng.random() < 0.5:
        return Fn("f", (unif_term(rng, depth - 1),))
    return Fn("g", (unif_term(rng, depth - 1), unif_term(rng, depth - 1)))
