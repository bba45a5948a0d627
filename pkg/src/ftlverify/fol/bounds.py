"""Relax-then-check for bounded quantifiers.

A prover may run on a problem whose notion guards were erased; each
binding it used is then checked against the guard it skipped.
"""

from __future__ import annotations

from collections.abc import Mapping

from .logic import Atom, AtomLike, Clause, Literal, Term, Var, subst_atom
from .unify import match


def _bound_atom(var: str, bound: str | Atom, term: Term) -> AtomLike:
    if isinstance(bound, str):
        return Atom(bound, (term,))
    return subst_atom(bound, {var: term})


def unit_derivable(goal: AtomLike, premises: list[Clause]) -> bool:
    """Quick discharge: ``goal`` is an instance of a positive unit premise,
    or follows from the ground premises by unit propagation."""
    for c in premises:
        if len(c) == 1 and c.literals[0].positive and match(c.literals[0].atom, goal) is not None:
            return True
    ground = [c for c in premises if not c.variables()]
    return propagates_to_conflict(ground + [Clause((Literal(False, goal),))])


def propagates_to_conflict(clauses: list[Clause]) -> bool:
    """Ground unit propagation; True iff it derives the empty clause."""
    assigned: dict[AtomLike, bool] = {}
    changed = True
    while changed:
        changed = False
        for c in clauses:
            open_lits = []
            satisfied = False
            for lit in c.literals:
                value = assigned.get(lit.atom)
                if value is None:
                    open_lits.append(lit)
                elif value == lit.positive:
                    satisfied = True
                    break
            if satisfied:
                continue
            if not open_lits:
                return True
            if len(open_lits) == 1:
                assigned[open_lits[0].atom] = open_lits[0].positive
                changed = True
    return False


def check_bounds(sub: Mapping[str, Term], bounds: Mapping[str, str | Atom],
                 premises: list[Clause]) -> list[str]:
    """Violations of ``bounds`` by ``sub``; the empty list means ok.

    ``bounds`` maps a variable either to a unary notion predicate or to a
    guard atom mentioning the variable (for notions with arguments).
    """
    violations = []
    for var, term in sub.items():
        bound = bounds.get(var)
        if bound is None or term == Var(var):
            continue
        goal = _bound_atom(var, bound, term)
        if not unit_derivable(goal, premises):
            violations.append(f"{var}: {goal} unproved")
    return violations
