"""Walk a document and emit one proof task per goal sentence.

Visibility follows the text: a goal sees the blocks before it, the steps
already taken in its own proof, and the hypotheses of enclosing cases.
Inside a proof the variables of the claim become constants, and the notion
guards they carry become hypotheses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import BadInductionShape, InductionError, SourcePosition, UnboundVariable
from ..fol.logic import (
    And, Atom, Fn, Forall, Formula, Implies, Term, Var, conj, disj, free_vars,
    function_symbols, predicate_symbols, substitute,
)
from ..fol.translate import phrase_guard, translate, translate_definition
from ..syntax import ast
from ..syntax.ast import Document, NotionPhrase
from .tasks import (
    AXIOM, CASE, CLAIM, DEFINITION, HYPOTHESIS, INDUCTION, STEP, Hints, Premise, ProofTask,
)


@dataclass(frozen=True)
class DefinitionEntry:
    symbol: str
    params: tuple[str, ...]
    body: Formula
    label: str


def transitivity_formula(rel: str) -> Formula:
    x, y, z = Var("x"), Var("y"), Var("z")
    return Forall("x", Forall("y", Forall("z", Implies(
        conj(Atom(rel, (x, y)), Atom(rel, (y, z))), Atom(rel, (x, z))))))


def _guard_for(body: Formula, x: str) -> tuple[Formula, Formula] | None:
    """Split ``guard => rest`` when every guard conjunct is an atom about x."""
    if not isinstance(body, Implies):
        return None
    parts = body.lhs.args if isinstance(body.lhs, And) else (body.lhs,)
    if all(isinstance(p, Atom) and p.args and p.args[0] == Var(x) for p in parts):
        return body.lhs, body.rhs
    return None


def generate_induction(task: ProofTask, order: str, constant: str | None = None) -> ProofTask:
    """Induction on the outermost variable of ``forall x (guard(x) => P(x))``.

    The goal becomes ``guard(c) => P(c)`` for a fresh constant c and the
    hypothesis ``forall x (guard(x) & order(x, c) => P(x))`` is added.
    """
    g = task.goal
    if not isinstance(g, Forall):
        raise BadInductionShape("induction needs a goal quantified over a notion")
    split = _guard_for(g.body, g.var)
    if split is None:
        raise BadInductionShape(f"induction variable {g.var} is not bounded by a notion")
    guard, rest = split
    if constant is None:
        taken = set(function_symbols(g)) | set(predicate_symbols(g))
        for p in task.premises:
            taken |= set(function_symbols(p.formula))
        constant = g.var if g.var not in taken else next(
            f"{g.var}{k}" for k in range(1, 10**6) if f"{g.var}{k}" not in taken)
    c = Fn(constant)
    x = Var(g.var)
    hypothesis = Forall(g.var, Implies(conj(guard, Atom(order, (x, c))), rest))
    labels = {p.label for p in task.premises}
    label = "induction_hypothesis"
    k = 1
    while label in labels:
        k += 1
        label = f"induction_hypothesis_{k}"
    ih = Premise(label, hypothesis, INDUCTION, task.origin)
    goal = Implies(substitute(guard, {g.var: c}), substitute(rest, {g.var: c}))
    hints = Hints(True, task.hints.depth, task.hints.expanded, task.hints.warnings)
    return ProofTask(goal, task.premises + (ih,), task.origin, task.kind, hints, task.label)


@dataclass
class _Scope:
    consts: dict[str, Term] = field(default_factory=dict)


class TaskBuilder:
    def __init__(self, doc: Document, depth: int = 2):
        self.doc = doc
        self.vocab = doc.vocab
        self.depth = depth
        self.typing: dict[str, NotionPhrase] = {}
        self.premises: list[Premise] = []
        self.tasks: list[ProofTask] = []
        self.definitions: dict[str, DefinitionEntry] = {}
        self.labels: set[str] = set()
        self.task_labels: set[str] = set()
        self.symbols = {p.symbol for p in doc.vocab.patterns}

    # -- naming -----------------------------------------------------------------

    def label(self, base: str, pos: SourcePosition | None, taken: set[str] | None = None) -> str:
        taken = self.labels if taken is None else taken
        name = f"{base}_{pos.line}" if pos is not None else base
        out, k = name, 1
        while out in taken:
            k += 1
            out = f"{name}_{k}"
        taken.add(out)
        return out

    def constant(self, var: str, scope: _Scope) -> Fn:
        taken = self.symbols | {c.symbol for c in scope.consts.values()}
        name, k = var, 1
        while name in taken:
            k += 1
            name = f"{var}{k}"
        self.symbols.add(name)
        return Fn(name)

    # -- formulas -----------------------------------------------------------------

    def close(self, f: Formula) -> Formula:
        """Universal closure, guarding Let-typed variables by their notion."""
        for v in reversed(free_vars(f)):
            phrase = self.typing.get(v)
            if phrase is not None:
                f = Forall(v, Implies(phrase_guard(phrase, Var(v)), f))
            else:
                f = Forall(v, f)
        return f

    def formula(self, stmt: ast.Statement, scope: _Scope,
                pos: SourcePosition | None = None) -> Formula:
        try:
            f = translate(stmt, self.vocab, free=set(self.typing) | set(scope.consts))
        except UnboundVariable as e:
            e.pos = e.pos or pos
            raise
        f = substitute(f, dict(scope.consts))
        return self.close(f)

    def peel(self, f: Formula, scope: _Scope) -> tuple[list[Formula], Formula]:
        """Strip leading quantifiers into constants, guards into hypotheses."""
        hyps = []
        while isinstance(f, Forall):
            c = self.constant(f.var, scope)
            scope.consts[f.var] = c
            body = substitute(f.body, {f.var: c})
            split = _guard_for(f.body, f.var)
            if split is not None:
                guard, rest = split
                hyps.append(substitute(guard, {f.var: c}))
                f = substitute(rest, {f.var: c})
            else:
                f = body
        return hyps, f

    def emit(self, goal: Formula, premises, origin, kind: str, base: str) -> ProofTask:
        t = ProofTask(goal, tuple(premises), origin, kind, Hints(depth=self.depth),
                      self.label(base, origin, self.task_labels))
        self.tasks.append(t)
        return t

    # -- blocks -------------------------------------------------------------------

    def build(self) -> list[ProofTask]:
        for block in self.doc.blocks:
            if isinstance(block, ast.Signature):
                self.signature(block)
            elif isinstance(block, ast.Definition):
                f = translate_definition(block)
                label = self.label(f"def_{block.pattern.symbol}", None)
                p = Premise(label, f, DEFINITION, block.pos, block.pattern.symbol)
                self.premises.append(p)
                body = translate(block.body, free=block.params)
                self.definitions[block.pattern.symbol] = DefinitionEntry(
                    block.pattern.symbol, block.params, body, label)
            elif isinstance(block, ast.Axiom):
                f = self.formula(block.statement, _Scope(), block.pos)
                self.premises.append(Premise(self.label("axiom", block.pos), f, AXIOM, block.pos))
            elif isinstance(block, ast.Claim):
                f = self.formula(block.statement, _Scope(), block.pos)
                if block.proof is None:
                    self.emit(f, self.premises, block.pos, "claim", block.kind)
                else:
                    self.prove(f, block.proof, list(self.premises), _Scope(), block.pos,
                               block.kind)
                self.premises.append(Premise(self.label(block.kind, block.pos), f, CLAIM,
                                             block.pos))
        return self.tasks

    def signature(self, block: ast.Signature) -> None:
        for item in block.items:
            if isinstance(item, ast.LetDecl):
                for v in item.variables:
                    self.typing[v] = item.phrase
            elif item.transitive:
                sym = item.pattern.symbol
                self.premises.append(Premise(self.label("transitivity", block.pos),
                                             transitivity_formula(sym), AXIOM, block.pos))

    # -- proofs -------------------------------------------------------------------

    def prove(self, f: Formula, proof: ast.ProofBlock, ctx: list[Premise], outer: _Scope,
              origin, base: str) -> None:
        scope = _Scope(dict(outer.consts))
        local = list(ctx)
        if proof.induction:
            if not self.vocab.well_founded:
                raise InductionError("proof by induction needs a declared well-founded relation",
                                     proof.pos)
            if not isinstance(f, Forall):
                raise BadInductionShape("induction needs a universally quantified claim",
                                        proof.pos)
            c = self.constant(f.var, scope)
            seed = ProofTask(f, tuple(local), origin)
            t = generate_induction(seed, self.vocab.well_founded[0], c.symbol)
            scope.consts[f.var] = c
            ih = t.premises[-1]
            local.append(Premise(self.label("induction_hypothesis", proof.pos), ih.formula,
                                 INDUCTION, proof.pos))
            f = t.goal
            split = f.lhs, f.rhs
            local.append(Premise(self.label("assumption", proof.pos), split[0], HYPOTHESIS,
                                 proof.pos))
            f = split[1]
        hyps, thesis = self.peel(f, scope)
        for h in hyps:
            local.append(Premise(self.label("assumption", proof.pos), h, HYPOTHESIS, proof.pos))
        local = self.steps(proof.steps, local, thesis, scope)
        self.emit(thesis, local, origin, "final", base)

    def steps(self, steps, local: list[Premise], thesis: Formula, scope: _Scope) -> list[Premise]:
        local = list(local)
        i = 0
        while i < len(steps):
            st = steps[i]
            if isinstance(st, ast.CaseBlock):
                run = []
                while i < len(steps) and isinstance(steps[i], ast.CaseBlock):
                    run.append(steps[i])
                    i += 1
                local = self.cases(run, local, thesis, scope)
                continue
            f = self.formula(st.statement, scope, st.pos)
            if st.proof is None:
                self.emit(f, local, st.pos, "step", "step")
            else:
                self.prove(f, st.proof, local, scope, st.pos, "step")
            local.append(Premise(self.label("step", st.pos), f, STEP, st.pos))
            i += 1
        return local

    def cases(self, run, local: list[Premise], thesis: Formula, scope: _Scope) -> list[Premise]:
        hyps = []
        for cb in run:
            h = self.formula(cb.hypothesis, scope, cb.pos)
            hyps.append(h)
            inner = local + [Premise(self.label("case", cb.pos), h, CASE, cb.pos)]
            inner = self.steps(cb.steps, inner, thesis, scope)
            self.emit(thesis, inner, cb.pos, "case", "case")
        self.emit(disj(*hyps), local, run[0].pos, "completeness", "cases")
        out = list(local)
        out.append(Premise(self.label("cases", run[0].pos), disj(*hyps), STEP, run[0].pos))
        for cb, h in zip(run, hyps):
            out.append(Premise(self.label("case_done", cb.pos), Implies(h, thesis), STEP, cb.pos))
        return out


def build_tasks(doc: Document, depth: int = 2) -> list[ProofTask]:
    """Proof tasks of ``doc`` in document order."""
    return TaskBuilder(doc, depth).build()
