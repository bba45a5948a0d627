"""The verification run: build tasks, simplify them, hand them to provers."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import SourcePosition
from ..fol.brand import brand_labeled
from ..fol.logic import Clause, Eq, Formula, NameSupply, Not, subformulas, symbols
from ..fol.normal import skolemize_cnf
from ..prover import ProverConfig, Refutation, Status, Verdict, check_refutation, prove
from ..syntax.ast import Document
from .build import DefinitionEntry, TaskBuilder
from .tasks import ProofTask
from .transform import expand_definitions, filter_premises, local_lemma_pass

VERIFIED_BY_LEMMA = "verified-by-lemma-pass"
VERIFIED_BY_PROVER = "verified-by-prover"
FAILED = "failed"

NEGATED_GOAL = "negated_goal"
EQUALITY_FREE_SHARE = 0.3      # of the timeout, for the attempt without equality premises


@dataclass(frozen=True)
class VerifierConfig:
    timeout: float = 10.0
    depth: int = 2
    filter_k: int = 2
    chaining: bool = True
    provers: tuple[str, ...] = ("native",)
    external: dict = field(default_factory=dict, hash=False)   # id -> ExternalProverSpec
    dump_dir: str | None = None
    jobs: int = 1
    max_clauses: int = 20000

    def __post_init__(self) -> None:
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.depth < 0:
            raise ValueError("expansion depth must be non-negative")
        if self.filter_k < 1:
            raise ValueError("filter depth must be at least 1")
        if not self.provers:
            raise ValueError("no prover selected")
        for p in self.provers:
            if p != "native" and p not in self.external:
                raise ValueError(f"unknown prover {p!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


@dataclass
class GoalResult:
    origin: SourcePosition | None
    kind: str
    label: str
    goal: Formula
    status: str
    prover: str | None = None
    millis: int = 0
    reason: str | None = None          # timeout | refuted | error, for failed goals
    refutation: Refutation | None = None
    task: ProofTask | None = None      # the task as finally dispatched
    message: str = ""
    warnings: tuple[str, ...] = ()

    @property
    def verified(self) -> bool:
        return self.status != FAILED

    @property
    def assumed(self) -> bool:
        """Failed goals are still used as premises by later goals."""
        return self.status == FAILED

    @property
    def checked(self) -> bool:
        return self.refutation is not None


@dataclass
class VerificationReport:
    entries: list[GoalResult] = field(default_factory=list)
    file: str | None = None

    @property
    def success(self) -> bool:
        return all(e.verified for e in self.entries)

    def summary(self) -> dict[str, int]:
        out = {VERIFIED_BY_LEMMA: 0, VERIFIED_BY_PROVER: 0, FAILED: 0}
        for e in self.entries:
            out[e.status] += 1
        out["total"] = len(self.entries)
        return out


# -- preparation ----------------------------------------------------------------------

@dataclass(frozen=True)
class Prepared:
    """A task after the prover-free stages; ``lemma`` is set when already discharged."""
    original: ProofTask
    task: ProofTask
    lemma: str | None = None


def prepare(task: ProofTask, defs: dict[str, DefinitionEntry], cfg: VerifierConfig) -> Prepared:
    first = local_lemma_pass(task)
    if first.discharged:
        return Prepared(task, first.task, first.reason)
    t = expand_definitions(task, defs, cfg.depth)
    second = local_lemma_pass(t)
    if second.discharged:
        return Prepared(task, second.task, second.reason)
    return Prepared(task, filter_premises(second.task, cfg.filter_k))


def prepare_document(doc: Document, cfg: VerifierConfig | None = None) -> list[Prepared]:
    cfg = cfg or VerifierConfig()
    builder = TaskBuilder(doc, cfg.depth)
    tasks = builder.build()
    return [prepare(t, builder.definitions, cfg) for t in tasks]


# -- native dispatch -------------------------------------------------------------------

def task_clauses(task: ProofTask) -> tuple[list[Clause], list[Clause], list[str]]:
    """Premise clauses, negated-goal clauses and input labels (premises first)."""
    taken: set[str] = set(symbols(task.goal))
    for p in task.premises:
        taken.update(symbols(p.formula))
    skolems = NameSupply("sk", taken=taken)
    variables = NameSupply("X")
    items: list[tuple[Clause, tuple[str, bool]]] = []
    for p in task.premises:
        for c in skolemize_cnf(p.formula, skolems, variables, "premise"):
            items.append((c, (p.label, False)))
    for c in skolemize_cnf(Not(task.goal), skolems, variables, "goal"):
        items.append((c, (NEGATED_GOAL, True)))
    if any(c.has_equality() for c, _ in items):
        items = brand_labeled(items, ("reflexivity", False))
    premises = [(c, lab) for c, (lab, goal) in items if not goal]
    goals = [(c, lab) for c, (lab, goal) in items if goal]
    labels = [lab for _, lab in premises] + [lab for _, lab in goals]
    return [c for c, _ in premises], [c for c, _ in goals], labels


def _has_equality(f: Formula) -> bool:
    return any(isinstance(g, Eq) for g in subformulas(f))


def _native(task: ProofTask, cfg: VerifierConfig, transitive: frozenset[str],
            timeout: float) -> Verdict:
    premises, goals, labels = task_clauses(task)
    chaining: frozenset[str] = frozenset()
    if cfg.chaining and transitive:
        used: set[str] = set()
        for c in premises + goals:
            used.update(l.atom.pred for l in c.literals)
        chaining = frozenset(transitive & used)
    pcfg = ProverConfig(timeout=timeout, max_clauses=cfg.max_clauses, chaining=chaining)
    return prove(premises, goals, pcfg, labels)


def run_native(task: ProofTask, cfg: VerifierConfig, transitive: frozenset[str]) -> Verdict:
    """Native proof search; the refutation is re-checked before it is accepted.

    When only some premises mention equality and the goal does not, a
    shorter search without them comes first: Brand's flattening makes
    every clause larger, and most goals do not need equality at all.
    """
    eq_premises = [p for p in task.premises if _has_equality(p.formula)]
    verdict = None
    if eq_premises and not _has_equality(task.goal) and len(eq_premises) < len(task.premises):
        started = time.monotonic()
        lean = task.with_premises([p for p in task.premises if p not in eq_premises])
        first = _native(lean, cfg, transitive, cfg.timeout * EQUALITY_FREE_SHARE)
        if first.proved:
            verdict = first
        else:
            rest = max(cfg.timeout - (time.monotonic() - started), 0.05)
            verdict = _native(task, cfg, transitive, rest)
            verdict.stats["millis"] = int((time.monotonic() - started) * 1000)
    else:
        verdict = _native(task, cfg, transitive, cfg.timeout)
    if verdict.proved:
        check = check_refutation(verdict.refutation)
        if not check.ok:
            return Verdict(Status.ERROR, None, "native", verdict.stats,
                           f"refutation failed the step check at {check.bad_step}: {check.reason}")
    return verdict


def _reason(status: Status) -> str:
    if status is Status.SATURATED:
        return "refuted"
    if status in (Status.TIMED_OUT, Status.RESOURCE_OUT):
        return "timeout"
    return "error"


def dispatch(task: ProofTask, cfg: VerifierConfig, transitive: frozenset[str]) -> Verdict:
    """Try the configured provers in order; the first proof wins."""
    from ..bridge import run_external, to_tptp

    last: Verdict | None = None
    for pid in cfg.provers:
        started = time.monotonic()
        try:
            if pid == "native":
                v = run_native(task, cfg, transitive)
            else:
                v = run_external(cfg.external[pid], to_tptp(task), cfg.timeout)
        except Exception as e:          # a crashing prover fails this goal only
            v = Verdict(Status.ERROR, None, pid, {}, f"{type(e).__name__}: {e}")
        if "millis" not in v.stats:
            v.stats["millis"] = int((time.monotonic() - started) * 1000)
        if v.proved:
            return v
        last = v
    assert last is not None
    return last


def _dump(cfg: VerifierConfig, index: int, task: ProofTask) -> None:
    d = Path(cfg.dump_dir)
    d.mkdir(parents=True, exist_ok=True)
    (d / f"{index:03d}_{task.label}.task").write_text(task.text(), encoding="utf-8")


def _verify_one(index: int, prep: Prepared, cfg: VerifierConfig,
                transitive: frozenset[str]) -> GoalResult:
    t = prep.task
    base = dict(origin=prep.original.origin, kind=prep.original.kind, label=prep.original.label,
                goal=prep.original.goal, task=t, warnings=t.hints.warnings)
    if cfg.dump_dir:
        _dump(cfg, index, t)
    if prep.lemma is not None:
        return GoalResult(status=VERIFIED_BY_LEMMA, message=prep.lemma, **base)
    v = dispatch(t, cfg, transitive)
    millis = int(v.stats.get("millis", 0))
    if v.proved:
        return GoalResult(status=VERIFIED_BY_PROVER, prover=v.prover, millis=millis,
                          refutation=v.refutation, **base)
    return GoalResult(status=FAILED, prover=v.prover, millis=millis, reason=_reason(v.status),
                      message=v.message, **base)


def verify_document(doc: Document, config: VerifierConfig | None = None,
                    file: str | None = None) -> VerificationReport:
    """Verify every goal of ``doc``; results come back in document order.

    Every task's premises are fixed once the document is read, so tasks may
    run concurrently (``config.jobs``); a failed goal is still a premise of
    the goals after it.
    """
    cfg = config or VerifierConfig()
    prepared = prepare_document(doc, cfg)
    transitive = frozenset(doc.vocab.transitive)
    if cfg.jobs == 1 or len(prepared) < 2:
        entries = [_verify_one(i, p, cfg, transitive) for i, p in enumerate(prepared, 1)]
    else:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            futures = [pool.submit(_verify_one, i, p, cfg, transitive)
                       for i, p in enumerate(prepared, 1)]
            entries = [f.result() for f in futures]
    return VerificationReport(entries, file)


__all__ = [
    "FAILED", "GoalResult", "Prepared", "VERIFIED_BY_LEMMA", "VERIFIED_BY_PROVER",
    "VerificationReport", "VerifierConfig", "dispatch", "prepare",
    "prepare_document", "run_native", "task_clauses", "verify_document",
]
