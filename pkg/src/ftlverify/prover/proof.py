"""Refutation objects and an independent step checker."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..fol.logic import Clause, Literal, Term, make_clause, subst_atom, subst_term
from ..fol.unify import Substitution, mgu, unify, UnificationFailure
from .inference import chain_inference, is_variant, rename_apart


@dataclass(frozen=True)
class ProofStep:
    id: int
    clause: Clause
    rule: str                          # input | resolution | factoring | chaining
    parents: tuple[int, ...] = ()
    literals: tuple = ()
    unifier: Substitution = field(default_factory=dict, compare=False, hash=False)
    relation: str | None = None
    mode: str | None = None
    label: str | None = None           # premise name for input steps

    def line(self) -> str:
        """``id. <clause> [rule parent-ids]``."""
        if self.rule == "input":
            tag = f"input {self.label}" if self.label else "input"
        else:
            rule = f"chain({self.relation})" if self.rule == "chaining" else self.rule
            tag = " ".join([rule] + [str(p) for p in self.parents])
        return f"{self.id}. {self.clause} [{tag}]"


@dataclass(frozen=True)
class Refutation:
    steps: tuple[ProofStep, ...]

    @property
    def sink(self) -> ProofStep:
        return self.steps[-1]

    def by_id(self) -> dict[int, ProofStep]:
        return {s.id: s for s in self.steps}

    def text(self) -> str:
        return "\n".join(s.line() for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    bad_step: int | str | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _apply(lits, sigma) -> list[Literal]:
    return [Literal(l.positive, subst_atom(l.atom, sigma)) for l in lits]


def _unifies(sigma: Substitution, a, b) -> bool:
    return subst_atom(a, sigma) == subst_atom(b, sigma)


def _recheck(step: ProofStep, parents: list[Clause]) -> tuple[Clause | None, str]:
    """Recompute the step's clause from scratch; also validate its recorded unifier."""
    if step.rule == "resolution":
        i, js = step.literals
        left, right = rename_apart(parents[0], "L"), rename_apart(parents[1], "R")
        if not (0 <= i < len(left)) or any(not 0 <= j < len(right) for j in js):
            return None, "literal index out of range"
        lit = left.literals[i]
        sigma: Substitution = {}
        for j in js:
            other = right.literals[j]
            if other.positive == lit.positive:
                return None, "resolved literals have the same sign"
            try:
                sigma = unify(lit.atom, other.atom, sigma)
            except UnificationFailure:
                return None, "literals do not unify"
            if not _unifies(step.unifier, lit.atom, other.atom):
                return None, "recorded unifier does not unify the resolved literals"
        rest = [l for k, l in enumerate(left.literals) if k != i]
        rest += [l for k, l in enumerate(right.literals) if k not in js]
        return make_clause(_apply(rest, sigma), "derived"), ""
    if step.rule == "factoring":
        i, j = step.literals
        left = rename_apart(parents[0], "L")
        a, b = left.literals[i], left.literals[j]
        sigma = mgu(a.atom, b.atom) if a.positive == b.positive else None
        if sigma is None:
            return None, "factored literals do not unify"
        if not _unifies(step.unifier, a.atom, b.atom):
            return None, "recorded unifier does not unify the factored literals"
        rest = [l for k, l in enumerate(left.literals) if k != j]
        return make_clause(_apply(rest, sigma), "derived"), ""
    if step.rule == "chaining":
        i, j = step.literals
        inf = chain_inference(parents[0], parents[1], i, j, step.relation, step.mode)
        if inf is None:
            return None, "chaining premises do not match"
        left, right = rename_apart(parents[0], "L"), rename_apart(parents[1], "R")
        x, y = _chain_positions(left.literals[i], right.literals[j], step.mode)
        if subst_term(x, step.unifier) != subst_term(y, step.unifier):
            return None, "recorded unifier does not connect the chained literals"
        return inf.clause, ""
    return None, f"unknown rule {step.rule}"


def _chain_positions(a: Literal, b: Literal, mode: str) -> tuple[Term, Term]:
    """The two argument positions a chaining step unifies."""
    if mode == "pos":
        return a.atom.args[1], b.atom.args[0]
    if mode == "neg-left":
        return a.atom.args[0], b.atom.args[0]
    return a.atom.args[1], b.atom.args[1]


def check_refutation(r: Refutation, inputs: list[Clause] | None = None) -> CheckResult:
    """Re-derive every step from its parents; the sink must be empty.

    When ``inputs`` is given, every input step must be a variant of one of them.
    """
    if not r.steps:
        return CheckResult(False, "sink", "no steps")
    seen: dict[int, Clause] = {}
    for step in r.steps:
        if step.id in seen:
            return CheckResult(False, step.id, "duplicate step id")
        if step.rule == "input":
            if inputs is not None and not any(is_variant(step.clause, c) for c in inputs):
                return CheckResult(False, step.id, "input clause not in the problem")
        else:
            if any(p not in seen for p in step.parents):
                return CheckResult(False, step.id, "parent missing or not earlier")
            expected = 2 if step.rule in ("resolution", "chaining") else 1
            if len(step.parents) != expected:
                return CheckResult(False, step.id, "wrong number of parents")
            try:
                derived, why = _recheck(step, [seen[p] for p in step.parents])
            except (IndexError, ValueError, TypeError) as exc:
                return CheckResult(False, step.id, f"malformed step: {exc}")
            if derived is None:
                return CheckResult(False, step.id, why)
            if not is_variant(derived, step.clause):
                return CheckResult(False, step.id, "clause differs from the recomputed conclusion")
        seen[step.id] = step.clause
    if not r.sink.clause.is_empty:
        return CheckResult(False, "sink", "last step is not the empty clause")
    return CheckResult(True)
