"""Task transformations applied before a prover is called."""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..fol.bounds import propagates_to_conflict
from ..fol.logic import (
    And, Atom, Eq, Exists, Forall, Formula, Iff, Implies, Not, Or, Term, Var,
    free_vars, function_symbols, predicate_symbols, substitute, subformulas,
)
from ..fol.normal import skolemize_cnf
from .build import DefinitionEntry
from .tasks import DEFINITION, LEMMA, PROTECTED_KINDS, Premise, ProofTask


# -- definition expansion ---------------------------------------------------------

def _unfold(f: Formula, defs: dict[str, DefinitionEntry], todo: set[str]) -> Formula:
    if isinstance(f, Atom):
        d = defs.get(f.pred)
        if f.pred in todo and d is not None and len(d.params) == len(f.args):
            return substitute(d.body, dict(zip(d.params, f.args)))
        return f
    if isinstance(f, Not):
        return Not(_unfold(f.arg, defs, todo))
    if isinstance(f, (And, Or)):
        return type(f)(tuple(_unfold(a, defs, todo) for a in f.args))
    if isinstance(f, (Implies, Iff)):
        return type(f)(_unfold(f.lhs, defs, todo), _unfold(f.rhs, defs, todo))
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.var, _unfold(f.body, defs, todo))
    return f


def expand_definitions(task: ProofTask, defs: dict[str, DefinitionEntry],
                       depth: int) -> ProofTask:
    """Unfold defined symbols in the goal for up to ``depth`` rounds.

    The definitions used are added as premises. A symbol that comes back
    after being unfolded marks a cyclic definition; expansion then stops at
    the budget and the task carries a CyclicDefinition warning.
    """
    goal = task.goal
    expanded: list[str] = []
    warnings = list(task.hints.warnings)
    for _ in range(depth):
        present = [s for s in predicate_symbols(goal) if s in defs]
        if not present:
            break
        for s in present:
            if s not in expanded:
                expanded.append(s)
        goal = _unfold(goal, defs, set(present))
    leftover = [s for s in predicate_symbols(goal) if s in expanded]
    if leftover:
        warnings.append(f"CyclicDefinition: {', '.join(leftover)} still present after "
                        f"{depth} rounds")
    if not expanded:
        return task
    by_label = {p.label: p for p in task.premises}
    extra = []
    for s in expanded:
        if defs[s].label not in by_label:
            extra.append(Premise(defs[s].label, _definition_formula(defs[s]), DEFINITION,
                                 None, s))
    hints = replace(task.hints, expanded=task.hints.expanded + tuple(expanded),
                    warnings=tuple(warnings))
    return replace(task, goal=goal, premises=task.premises + tuple(extra), hints=hints)


def _definition_formula(d: DefinitionEntry) -> Formula:
    f: Formula = Iff(Atom(d.symbol, tuple(Var(p) for p in d.params)), d.body)
    for p in reversed(d.params):
        f = Forall(p, f)
    return f


# -- atomic local lemmas ------------------------------------------------------------

@dataclass(frozen=True)
class LemmaResult:
    discharged: bool
    task: ProofTask
    reason: str = ""


def _strip_forall(f: Formula) -> tuple[list[str], Formula]:
    names = []
    while isinstance(f, Forall):
        names.append(f.var)
        f = f.body
    return names, f


def _conjuncts(f: Formula) -> list[tuple[list[str], Formula]]:
    """Top-level conjuncts, each with the universal variables above it."""
    names, body = _strip_forall(f)
    if isinstance(body, And):
        out = []
        for a in body.args:
            for inner, g in _conjuncts(a):
                out.append((names + inner, g))
        return out
    return [(names, body)]


def match_formula(pattern: Formula, target: Formula, variables: set[str],
                  sigma: dict[str, Term] | None = None) -> dict[str, Term] | None:
    """Instance check: pattern with ``variables`` instantiated equals target."""
    sigma = dict(sigma or {})
    if isinstance(pattern, (Atom, Eq)):
        if type(pattern) is not type(target):
            return None
        if isinstance(pattern, Atom) and (pattern.pred != target.pred
                                          or len(pattern.args) != len(target.args)):
            return None
        for p, t in zip(pattern.args, target.args):
            if not _match_term(p, t, variables, sigma):
                return None
        return sigma
    if type(pattern) is not type(target):
        return None
    if isinstance(pattern, Not):
        return match_formula(pattern.arg, target.arg, variables, sigma)
    if isinstance(pattern, (And, Or)):
        if len(pattern.args) != len(target.args):
            return None
        for a, b in zip(pattern.args, target.args):
            sigma = match_formula(a, b, variables, sigma)
            if sigma is None:
                return None
        return sigma
    if isinstance(pattern, (Implies, Iff)):
        sigma = match_formula(pattern.lhs, target.lhs, variables, sigma)
        return None if sigma is None else match_formula(pattern.rhs, target.rhs, variables, sigma)
    if isinstance(pattern, (Forall, Exists)):
        if pattern.var != target.var:
            return None
        return match_formula(pattern.body, target.body, variables - {pattern.var}, sigma)
    return sigma if pattern == target else None


def _match_term(p: Term, t: Term, variables: set[str], sigma: dict[str, Term]) -> bool:
    if isinstance(p, Var) and p.name in variables:
        bound = sigma.get(p.name)
        if bound is None:
            sigma[p.name] = t
            return True
        return bound == t
    if isinstance(p, Var) or isinstance(t, Var):
        return p == t
    if p.symbol != t.symbol or len(p.args) != len(t.args):
        return False
    return all(_match_term(a, b, variables, sigma) for a, b in zip(p.args, t.args))


def _ground(f: Formula) -> bool:
    return not free_vars(f) and not any(isinstance(g, (Forall, Exists)) for g in subformulas(f))


def _ground_literals(f: Formula) -> list[Formula]:
    out = []
    for names, g in _conjuncts(f):
        if names:
            continue
        if isinstance(g, (Atom, Eq)) or (isinstance(g, Not) and isinstance(g.arg, (Atom, Eq))):
            if _ground(g):
                out.append(g)
    return out


def _constants(f: Formula) -> set[str]:
    return {s for s, n in function_symbols(f).items() if n == 0}


def local_lemma_pass(task: ProofTask) -> LemmaResult:
    """Discharge simple goals without a prover.

    (a) the goal is an instance of a premise or of a top-level conjunct;
    (b) the goal is ground and follows from the ground premises by unit
        propagation. Otherwise ground atomic facts about the goal's
        constants are attached as ``lemma`` premises.
    """
    _, goal = _strip_forall(task.goal)
    for p in task.premises:
        for names, conj in _conjuncts(p.formula):
            if match_formula(conj, goal, set(names)) is not None:
                return LemmaResult(True, task, f"instance of {p.label}")
    if _ground(task.goal):
        ground = [p.formula for p in task.premises if _ground(p.formula)]
        clauses = [c for f in ground + [Not(task.goal)] for c in skolemize_cnf(f)]
        if propagates_to_conflict(clauses):
            return LemmaResult(True, task, "unit propagation")
    wanted = _constants(task.goal)
    present = {p.formula for p in task.premises}
    lemmas, k = [], 0
    for p in task.premises:
        if p.kind == LEMMA:
            continue
        for lit in _ground_literals(p.formula):
            if lit in present or not (_constants(lit) & wanted):
                continue
            present.add(lit)
            k += 1
            lemmas.append(Premise(f"{task.label}_atom{k}", lit, LEMMA, p.origin))
    return LemmaResult(False, task.add_premises(lemmas))


# -- relevance filtering ------------------------------------------------------------

def _symbols(f: Formula) -> set[str]:
    return set(predicate_symbols(f)) | set(function_symbols(f))


def filter_premises(task: ProofTask, k: int) -> ProofTask:
    """Keep premises within ``k`` shared-symbol steps of the goal.

    Definitions of goal symbols, case and induction hypotheses, proof
    assumptions and attached local lemmas are always kept.
    """
    if k < 1:
        raise ValueError("filter depth must be at least 1")
    goal_symbols = _symbols(task.goal) | set(task.hints.expanded)
    reached = set(_symbols(task.goal))
    keep: set[int] = set()
    sym = [_symbols(p.formula) for p in task.premises]
    for _ in range(k):
        new = [i for i, s in enumerate(sym) if i not in keep and s & reached]
        if not new:
            break
        keep.update(new)
        for i in new:
            reached |= sym[i]
    kept = []
    for i, p in enumerate(task.premises):
        protected = p.kind in PROTECTED_KINDS or (p.kind == DEFINITION and p.defines in goal_symbols)
        if i in keep or protected:
            kept.append(p)
    return task.with_premises(kept)
