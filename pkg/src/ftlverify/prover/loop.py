"""Given-clause saturation with set of support.

Goal clauses start in the passive set; premises start active (usable), so
in the first phase every inference involves a clause descended from the
goal. If that phase saturates, the premises are queued too and the search
continues to full saturation, which makes a Saturated verdict genuine.
"""

from __future__ import annotations

import heapq
import itertools
import time
from dataclasses import dataclass

from ..fol.logic import Atom, Clause, Literal, Var, clause_weight, normalize_vars
from .config import ProverConfig, Status, Verdict
from .inference import Inference, chainings, factors, is_tautology, is_variant, resolvents, subsumes
from .proof import ProofStep, Refutation


@dataclass
class _Entry:
    id: int
    clause: Clause
    weight: int
    keys: frozenset
    features: frozenset
    alive: bool = True
    active: bool = False
    given: bool = False


def transitivity_axiom(rel: str) -> Clause:
    x, y, z = Var("X1"), Var("X2"), Var("X3")
    return Clause((Literal(False, Atom(rel, (x, y))), Literal(False, Atom(rel, (y, z))),
                   Literal(True, Atom(rel, (x, z)))))


def _keys(c: Clause) -> frozenset:
    return frozenset((l.positive, l.atom.pred) for l in c.literals)


def _symbols_in(t, out: set) -> None:
    if type(t) is not Var:
        out.add(t.symbol)
        for a in t.args:
            _symbols_in(a, out)


def _features(c: Clause) -> frozenset:
    """Features that can only grow under instantiation; a subsumer's are a subset."""
    out: set = set()
    syms: set = set()
    counts: dict = {}
    for l in c.literals:
        key = (l.positive, l.atom.pred)
        counts[key] = counts.get(key, 0) + 1
        out.add(key + (counts[key],))
        for i, t in enumerate(l.atom.args):
            if type(t) is not Var:
                out.add((l.positive, l.atom.pred, i, t.symbol))
                _symbols_in(t, syms)
    out.update(syms)
    return frozenset(out)


class _Search:
    def __init__(self, cfg: ProverConfig):
        self.cfg = cfg
        self.deadline = time.monotonic() + cfg.timeout
        self.steps: dict[int, ProofStep] = {}
        self.entries: dict[int, _Entry] = {}
        self.active: list[int] = []
        self.by_weight: list[tuple[int, int]] = []
        self.by_age: list[int] = []
        self.by_clause: dict[Clause, int] = {}
        self.buckets: dict[frozenset, set[int]] = {}
        self.next_id = 1
        self.picks = 0
        self.incomplete = False
        self.retained = 0
        self.generated = 0
        self.given_count = 0

    # -- bookkeeping ------------------------------------------------------------

    def _new_step(self, clause: Clause, rule: str, **kw) -> ProofStep:
        step = ProofStep(self.next_id, clause, rule, **kw)
        self.steps[step.id] = step
        self.next_id += 1
        return step

    def alive(self):
        return (e for e in self.entries.values() if e.alive)

    def _bucket_ids(self, keys: frozenset):
        """Alive entries whose literal signature is a subset of ``keys``."""
        if len(keys) <= 8:
            items = sorted(keys)
            for r in range(1, len(items) + 1):
                for sub in itertools.combinations(items, r):
                    yield from self.buckets.get(frozenset(sub), ())
        else:
            for k, ids in self.buckets.items():
                if k <= keys:
                    yield from ids

    def forward_subsumed(self, c: Clause) -> bool:
        if c in self.by_clause:
            return True
        n = len(c)
        feats = _features(c)
        for eid in self._bucket_ids(_keys(c)):
            e = self.entries[eid]
            if len(e.clause) <= n and e.features <= feats and subsumes(e.clause, c):
                return True
        return False

    def kill(self, e: _Entry) -> None:
        e.alive = False
        self.buckets[e.keys].discard(e.id)
        if self.by_clause.get(e.clause) == e.id:
            del self.by_clause[e.clause]
        if e.active:
            self.active.remove(e.id)

    def backward_subsume(self, c: Clause) -> None:
        keys = _keys(c)
        n = len(c)
        feats = _features(c)
        for k in [k for k in self.buckets if keys <= k]:
            for eid in list(self.buckets[k]):
                e = self.entries[eid]
                if (n <= len(e.clause) and feats <= e.features and e.clause != c
                        and subsumes(c, e.clause)):
                    self.kill(e)

    def retain(self, step: ProofStep, passive: bool) -> _Entry:
        c = step.clause
        e = _Entry(step.id, c, clause_weight(c), _keys(c), _features(c))
        self.entries[e.id] = e
        self.by_clause[c] = e.id
        self.buckets.setdefault(e.keys, set()).add(e.id)
        self.retained += 1
        if passive:
            self.enqueue(e)
        else:
            e.active = True
            self.active.append(e.id)
        return e

    def enqueue(self, e: _Entry) -> None:
        heapq.heappush(self.by_weight, (e.weight, e.id))
        heapq.heappush(self.by_age, e.id)

    def pick(self) -> _Entry | None:
        w, a = self.cfg.pick_ratio
        use_weight = self.picks % (w + a) < w
        self.picks += 1
        heaps = (self.by_weight, self.by_age) if use_weight else (self.by_age, self.by_weight)
        for heap in heaps:
            while heap:
                item = heapq.heappop(heap)
                e = self.entries[item[1] if isinstance(item, tuple) else item]
                if e.alive and not e.given:
                    return e
        return None

    # -- inference --------------------------------------------------------------

    def record(self, inf: Inference, parents: tuple[int, int] | tuple[int]) -> ProofStep | None:
        """Normalize, filter and store an inference result; returns its step if kept."""
        self.generated += 1
        c = normalize_vars(Clause(inf.clause.literals, "derived"))
        if c.literals and is_tautology(c):
            return None
        if self.cfg.max_weight is not None and clause_weight(c) > self.cfg.max_weight:
            self.incomplete = True
            return None
        if c.literals and self.forward_subsumed(c):
            return None
        step = self._new_step(c, inf.rule, parents=parents, literals=inf.literals,
                              unifier=inf.unifier, relation=inf.relation, mode=inf.mode)
        if c.is_empty:
            return step
        self.backward_subsume(c)
        self.retain(step, passive=True)
        return step

    def infer(self, given: _Entry):
        for inf in factors(given.clause):
            yield inf, (given.id,)
        chaining = self.cfg.chaining
        for pid in list(self.active):
            partner = self.entries[pid]
            if not partner.alive:
                continue
            if _may_resolve(given.keys, partner.keys):
                for inf in resolvents(given.clause, partner.clause):
                    yield inf, (given.id, pid)
            if chaining:
                for inf in chainings(given.clause, partner.clause, chaining):
                    yield inf, (given.id, pid)
                if pid != given.id:
                    for inf in chainings(partner.clause, given.clause, chaining):
                        yield inf, (pid, given.id)

    def out_of_time(self) -> bool:
        return time.monotonic() > self.deadline

    # -- proof extraction -------------------------------------------------------

    def refutation(self, sink: ProofStep) -> Refutation:
        needed, todo = set(), [sink.id]
        while todo:
            sid = todo.pop()
            if sid in needed:
                continue
            needed.add(sid)
            todo.extend(self.steps[sid].parents)
        renumber = {old: new for new, old in enumerate(sorted(needed), 1)}
        out = []
        for old in sorted(needed):
            s = self.steps[old]
            out.append(ProofStep(renumber[old], s.clause, s.rule,
                                 tuple(renumber[p] for p in s.parents), s.literals,
                                 s.unifier, s.relation, s.mode, s.label))
        return Refutation(tuple(out))


def _may_resolve(a: frozenset, b: frozenset) -> bool:
    return any((not pos, pred) in b for pos, pred in a)


def prove(premises: list[Clause], goals: list[Clause], cfg: ProverConfig | None = None,
          labels: list[str] | None = None) -> Verdict:
    """Search for a refutation of ``premises`` plus ``goals`` (the negated goal).

    ``labels`` optionally names the input clauses (premises first, then goals).
    """
    cfg = cfg or ProverConfig()
    s = _Search(cfg)
    started = time.monotonic()

    def verdict(status: Status, sink: ProofStep | None = None) -> Verdict:
        stats = {"retained": s.retained, "generated": s.generated, "given": s.given_count,
                 "millis": int((time.monotonic() - started) * 1000)}
        ref = s.refutation(sink) if sink is not None else None
        return Verdict(status, ref, "native", stats)

    withheld = [transitivity_axiom(r) for r in sorted(cfg.chaining)]
    labels = list(labels or [])
    inputs = [(c, False) for c in premises] + [(c, True) for c in goals]
    premise_entries: list[_Entry] = []
    for k, (c, is_goal) in enumerate(inputs):
        c = normalize_vars(Clause(c.literals, "goal" if is_goal else "premise"))
        if any(is_variant(c, ax) for ax in withheld):
            continue
        label = labels[k] if k < len(labels) else None
        if c.is_empty:
            return verdict(Status.PROVED, s._new_step(c, "input", label=label))
        if is_tautology(c) or s.forward_subsumed(c):
            continue
        step = s._new_step(c, "input", label=label)
        s.backward_subsume(c)
        passive = is_goal or not cfg.set_of_support
        e = s.retain(step, passive=passive)
        if not passive:
            premise_entries.append(e)
        if s.retained > cfg.max_clauses:
            return verdict(Status.RESOURCE_OUT)

    phase_two = not cfg.set_of_support
    while True:
        if s.out_of_time():
            return verdict(Status.TIMED_OUT)
        given = s.pick()
        if given is None:
            if phase_two:
                break
            # the support set saturated: let the premises interact as well
            phase_two = True
            for e in premise_entries:
                if e.alive:
                    s.enqueue(e)
            continue
        given.given = True
        s.given_count += 1
        if not given.active:
            given.active = True
            s.active.append(given.id)
        for inf, parents in s.infer(given):
            step = s.record(inf, parents)
            if step is not None and step.clause.is_empty:
                return verdict(Status.PROVED, step)
            if s.retained > cfg.max_clauses:
                return verdict(Status.RESOURCE_OUT)
            if s.generated % 16 == 0 and s.out_of_time():
                return verdict(Status.TIMED_OUT)
            if not given.alive:
                break
    return verdict(Status.RESOURCE_OUT if s.incomplete else Status.SATURATED)
