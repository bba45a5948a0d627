"""Clausal preprocessing: negation normal form, rectification, skolemization, CNF."""

from __future__ import annotations

from .logic import (
    FALSE, TRUE, And, Atom, Bottom, Clause, Eq, Exists, Fn, Forall, Formula, Iff,
    Implies, Literal, NameSupply, Not, Or, Term, Top, Var, conj, disj, free_vars,
    make_clause, rename_clause, substitute, symbols,
)


def nnf(f: Formula) -> Formula:
    """Negation normal form: no Implies/Iff, negation only on atoms."""
    return _nnf(f, True)


def _nnf(f: Formula, pos: bool) -> Formula:
    if isinstance(f, (Atom, Eq)):
        return f if pos else Not(f)
    if isinstance(f, Top):
        return TRUE if pos else FALSE
    if isinstance(f, Bottom):
        return FALSE if pos else TRUE
    if isinstance(f, Not):
        return _nnf(f.arg, not pos)
    if isinstance(f, And):
        parts = [_nnf(a, pos) for a in f.args]
        return conj(*parts) if pos else disj(*parts)
    if isinstance(f, Or):
        parts = [_nnf(a, pos) for a in f.args]
        return disj(*parts) if pos else conj(*parts)
    if isinstance(f, Implies):
        if pos:
            return disj(_nnf(f.lhs, False), _nnf(f.rhs, True))
        return conj(_nnf(f.lhs, True), _nnf(f.rhs, False))
    if isinstance(f, Iff):
        if pos:
            return conj(disj(_nnf(f.lhs, False), _nnf(f.rhs, True)),
                        disj(_nnf(f.rhs, False), _nnf(f.lhs, True)))
        return conj(disj(_nnf(f.lhs, True), _nnf(f.rhs, True)),
                    disj(_nnf(f.lhs, False), _nnf(f.rhs, False)))
    if isinstance(f, Forall):
        body = _nnf(f.body, pos)
        return Forall(f.var, body) if pos else Exists(f.var, body)
    if isinstance(f, Exists):
        body = _nnf(f.body, pos)
        return Exists(f.var, body) if pos else Forall(f.var, body)
    raise TypeError(f"not a formula: {f!r}")


def rectify(f: Formula, supply: NameSupply | None = None) -> Formula:
    """Rename bound variables apart from each other and from free variables."""
    free = free_vars(f)
    supply = supply or NameSupply("V", taken=free)
    seen = set(free)

    def walk(g: Formula) -> Formula:
        if isinstance(g, Not):
            return Not(walk(g.arg))
        if isinstance(g, (And, Or)):
            return type(g)(tuple(walk(a) for a in g.args))
        if isinstance(g, (Implies, Iff)):
            return type(g)(walk(g.lhs), walk(g.rhs))
        if isinstance(g, (Forall, Exists)):
            var, body = g.var, g.body
            if var in seen:
                new = supply()
                body = substitute(body, {var: Var(new)})
                var = new
            seen.add(var)
            return type(g)(var, walk(body))
        return g

    return walk(f)


def skolemize(f: Formula, supply: NameSupply) -> Formula:
    """Replace existentials of an NNF, rectified formula by skolem terms."""

    def walk(g: Formula, universals: tuple[str, ...]) -> Formula:
        if isinstance(g, (And, Or)):
            return type(g)(tuple(walk(a, universals) for a in g.args))
        if isinstance(g, Forall):
            return Forall(g.var, walk(g.body, universals + (g.var,)))
        if isinstance(g, Exists):
            inner_free = set(free_vars(g))
            deps = tuple(Var(u) for u in universals if u in inner_free)
            term = Fn(supply(), deps)
            return walk(substitute(g.body, {g.var: term}), universals)
        return g

    return walk(f, tuple(free_vars(f)))


def _strip_universals(f: Formula) -> Formula:
    if isinstance(f, Forall):
        return _strip_universals(f.body)
    if isinstance(f, (And, Or)):
        return type(f)(tuple(_strip_universals(a) for a in f.args))
    return f


def _cnf(f: Formula) -> list[list[Literal]]:
    if isinstance(f, Top):
        return []
    if isinstance(f, Bottom):
        return [[]]
    if isinstance(f, (Atom, Eq)):
        return [[Literal(True, f)]]
    if isinstance(f, Not):
        return [[Literal(False, f.arg)]]
    if isinstance(f, And):
        out: list[list[Literal]] = []
        for a in f.args:
            out.extend(_cnf(a))
        return out
    if isinstance(f, Or):
        result: list[list[Literal]] = [[]]
        for a in f.args:
            part = _cnf(a)
            result = [r + p for r in result for p in part]
        return result
    raise TypeError(f"unexpected connective in CNF conversion: {f!r}")


def _tautology(lits: list[Literal]) -> bool:
    for l in lits:
        if l.positive and Literal(False, l.atom) in lits:
            return True
        if isinstance(l.atom, Eq) and l.positive and l.atom.lhs == l.atom.rhs:
            return True
    return False


def skolemize_cnf(f: Formula, skolems: NameSupply | None = None,
                  variables: NameSupply | None = None, source: str = "premise") -> list[Clause]:
    """Equisatisfiable clause set for ``f``.

    Free variables are read universally. Skolem symbols come from
    ``skolems`` (default namespace ``sk``); clause variables from
    ``variables`` so that clauses are standardized apart.
    """
    skolems = skolems or NameSupply("sk", taken=symbols(f))
    variables = variables or NameSupply("X")
    g = skolemize(rectify(nnf(f)), skolems)
    clauses = []
    for lits in _cnf(_strip_universals(g)):
        if _tautology(lits):
            continue
        lits = [l for l in lits
                if not (not l.positive and isinstance(l.atom, Eq) and l.atom.lhs == l.atom.rhs)]
        c = make_clause(lits, source)
        mapping = {v: variables() for v in c.variables()}
        c = rename_clause(c, mapping)
        if c not in clauses:
            clauses.append(c)
    return clauses


def clausify(premises: list[Formula], goal: Formula | None,
             skolems: NameSupply | None = None) -> tuple[list[Clause], list[Clause]]:
    """Clauses of the premises and of the negated goal, sharing one skolem supply."""
    taken = set()
    for f in premises + ([goal] if goal is not None else []):
        taken.update(symbols(f))
    skolems = skolems or NameSupply("sk", taken=taken)
    variables = NameSupply("X")
    prem = [c for f in premises for c in skolemize_cnf(f, skolems, variables, "premise")]
    neg = [] if goal is None else skolemize_cnf(Not(goal), skolems, variables, "goal")
    return prem, neg


__all__ = ["nnf", "rectify", "skolemize", "skolemize_cnf", "clausify", "Term"]
