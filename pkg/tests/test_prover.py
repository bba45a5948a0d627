from __future__ import annotations

import dataclasses
import itertools
import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from fo_suite import PROBLEMS, problem_clauses
from generators import propositional_clauses
from oracles.finite_models import clause_formulas, satisfiable
from ftlverify.fol import Atom, Clause, Fn, Literal, Var
from ftlverify.fol.logic import make_clause
from ftlverify.prover import (
    ProverConfig, Refutation, Status, chain, check_refutation, factor, prove, resolve,
    subsumes, transitivity_axiom,
)
from ftlverify.prover.inference import chain_inference
from ftlverify.prover.proof import ProofStep

a, b, c, d = (Fn(n) for n in "abcd")
x, y = Var("x"), Var("y")


def pos(pred, *args):
    return Literal(True, Atom(pred, args))


def neg(pred, *args):
    return Literal(False, Atom(pred, args))


def cl(*lits):
    return make_clause(lits)


def lits(clause):
    return None if clause is None else clause.literals


class TestResolve:
    def test_textbook(self):
        r = resolve(cl(neg("p", x), pos("q", x)), cl(pos("p", a)), 0, 0)
        assert lits(r) == (pos("q", a),)

    def test_same_sign_fails(self):
        assert resolve(cl(pos("p", x)), cl(pos("p", a)), 0, 0) is None

    def test_renaming_apart(self):
        # both sides use x; renaming makes them unify to the empty clause
        r = resolve(cl(neg("p", Fn("f", (x,)))), cl(pos("p", x)), 0, 0)
        assert r is not None and r.is_empty

    def test_partner_literals_merged(self):
        r = resolve(cl(neg("p", x)), cl(pos("p", a), pos("p", y), pos("q", y)), 0, (0, 1))
        assert lits(r) == (pos("q", a),)

    def test_factor(self):
        assert lits(factor(cl(pos("p", x), pos("p", a)), 0, 1)) == (pos("p", a),)
        assert factor(cl(pos("p", x), neg("p", a)), 0, 1) is None


class TestChain:
    def test_ground(self):
        assert lits(chain(cl(pos("lt", a, b)), cl(pos("lt", b, c)), "lt")) == (pos("lt", a, c),)

    def test_no_link(self):
        assert chain(cl(pos("lt", a, b)), cl(pos("lt", c, d)), "lt") is None

    def test_with_side_literal(self):
        r = chain(cl(neg("p", x), pos("lt", x, b)), cl(pos("lt", b, c)), "lt")
        assert str(r) == "lt(X1,c) | ~p(X1)"

    def test_negative_modes(self):
        goal = cl(neg("lt", a, c))
        left = chain_inference(goal, cl(pos("lt", a, b)), 0, 0, "lt", "neg-left")
        assert lits(left.clause) == (neg("lt", b, c),)
        right = chain_inference(goal, cl(pos("lt", b, c)), 0, 0, "lt", "neg-right")
        assert lits(right.clause) == (neg("lt", a, b),)

    def test_other_relation_ignored(self):
        assert chain(cl(pos("le", a, b)), cl(pos("le", b, c)), "lt") is None


class TestSubsumption:
    def test_instance(self):
        assert subsumes(cl(pos("p", x)), cl(pos("p", a), pos("q", b)))

    def test_multiset(self):
        # two literals cannot both map onto one
        assert not subsumes(cl(pos("p", x), pos("p", y)), cl(pos("p", a)))

    def test_shared_variable(self):
        assert not subsumes(cl(pos("q", x, x)), cl(pos("q", a, b)))


class TestProveExamples:
    def test_p_implies_p(self):
        p = Atom("p")
        v = prove([], [cl(Literal(True, p)), cl(Literal(False, p))])
        assert v.status is Status.PROVED
        assert len(v.refutation) == 3 and v.refutation.sink.clause.is_empty

    def test_two_steps(self):
        v = prove([cl(neg("p", x), pos("q", x)), cl(pos("p", a))], [cl(neg("q", a))])
        assert v.proved and check_refutation(v.refutation).ok

    def test_saturated(self):
        v = prove([cl(pos("p", a))], [cl(neg("q", a))])
        assert v.status is Status.SATURATED

    def test_incomplete_config_never_saturates(self):
        v = prove([cl(pos("p", a))], [cl(neg("q", a))], ProverConfig(max_weight=5))
        assert v.status is Status.SATURATED
        big = [cl(neg("p", x), pos("p", Fn("f", (x,))))]
        v = prove([cl(pos("p", a))] + big, [cl(neg("q", a))], ProverConfig(max_weight=4))
        assert v.status is Status.RESOURCE_OUT

    def test_timeout(self):
        grow = [cl(neg("p", x), pos("p", Fn("f", (x,)))), cl(pos("p", a))]
        v = prove(grow, [cl(neg("q", a))], ProverConfig(timeout=0.2))
        assert v.status is Status.TIMED_OUT

    def test_labels_on_inputs(self):
        v = prove([cl(pos("p", a))], [cl(neg("p", a))], labels=["ax", "negated_goal"])
        labels = {s.label for s in v.refutation.steps if s.rule == "input"}
        assert labels == {"ax", "negated_goal"}


# -- refutation checking ----------------------------------------------------------------

def _sample_refutation() -> Refutation:
    v = prove([cl(neg("p", x), pos("q", x)), cl(pos("p", a))], [cl(neg("q", a))])
    return v.refutation


class TestCheckRefutation:
    def test_ok(self):
        assert check_refutation(_sample_refutation()).ok

    def test_tampered_unifier(self):
        r = _sample_refutation()
        k, step = next((k, s) for k, s in enumerate(r.steps) if s.rule == "resolution" and s.unifier)
        bogus = {v: Fn("zzz") for v in step.unifier}
        steps = list(r.steps)
        steps[k] = dataclasses.replace(step, unifier=bogus)
        result = check_refutation(Refutation(tuple(steps)))
        assert not result.ok and result.bad_step == step.id

    def test_tampered_clause(self):
        r = _sample_refutation()
        steps = list(r.steps)
        k = next(k for k, s in enumerate(steps) if s.rule != "input" and not s.clause.is_empty)
        steps[k] = dataclasses.replace(steps[k], clause=cl(pos("q", b)))
        assert check_refutation(Refutation(tuple(steps))).bad_step == steps[k].id

    def test_inputs_without_sink(self):
        r = Refutation((ProofStep(1, cl(pos("p", a)), "input"),))
        result = check_refutation(r)
        assert not result.ok and result.bad_step == "sink"

    def test_foreign_input(self):
        r = _sample_refutation()
        assert not check_refutation(r, inputs=[cl(pos("r", a))]).ok

    def test_forward_parent_rejected(self):
        r = _sample_refutation()
        steps = list(r.steps)
        last = steps[-1]
        steps[-1] = dataclasses.replace(last, parents=(last.id + 5, last.parents[1]))
        assert not check_refutation(Refutation(tuple(steps))).ok


# -- ground completeness ------------------------------------------------------------------

def _truth_table_sat(clauses: list[Clause]) -> bool:
    names = sorted({l.atom.pred for c in clauses for l in c.literals})
    for values in itertools.product((False, True), repeat=len(names)):
        model = dict(zip(names, values))
        if all(any(model[l.atom.pred] == l.positive for l in c.literals) for c in clauses):
            return True
    return False


def _prop_agrees(clauses) -> bool:
    v = prove([], clauses, ProverConfig(timeout=5.0))
    sat = _truth_table_sat(clauses)
    if v.proved:
        assert check_refutation(v.refutation).ok
    return (v.status is Status.SATURATED) if sat else v.proved


class TestGroundCompleteness:
    def test_200_sets_against_truth_table(self):
        rng = random.Random(2718)
        started = time.monotonic()
        outcomes = []
        for _ in range(200):
            clauses = propositional_clauses(rng)
            assert _prop_agrees(clauses), [str(c) for c in clauses]
            outcomes.append(_truth_table_sat(clauses))
        assert time.monotonic() - started < 30
        assert 20 <= sum(outcomes) <= 180          # both kinds well represented

    @settings(max_examples=50, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_random_sets(self, rng):
        assert _prop_agrees(propositional_clauses(rng))


# -- first-order suite ------------------------------------------------------------------

class TestFirstOrderSuite:
    def test_suite_size(self):
        assert len(PROBLEMS) >= 20

    @pytest.mark.parametrize("name", sorted(PROBLEMS))
    def test_problem(self, name):
        premises, goals = problem_clauses(PROBLEMS[name])
        started = time.monotonic()
        v = prove(premises, goals, ProverConfig(timeout=5.0))
        assert v.proved and time.monotonic() - started < 5.0
        assert check_refutation(v.refutation, premises + goals).ok

    @pytest.mark.parametrize("name", sorted(PROBLEMS))
    def test_goal_orientation(self, name):
        """With consistent axioms every derived step descends from the negated goal."""
        premises, goals = problem_clauses(PROBLEMS[name])
        r = prove(premises, goals, ProverConfig(timeout=5.0)).refutation
        from_goal: set[int] = set()
        for s in r.steps:
            if s.rule == "input":
                if s.clause.source == "goal":
                    from_goal.add(s.id)
            else:
                assert any(p in from_goal for p in s.parents), s.line()
                from_goal.add(s.id)

    def test_deterministic(self):
        for text in PROBLEMS.values():
            p, g = problem_clauses(text)
            one, two = prove(p, g), prove(p, g)
            assert one.status == two.status
            assert one.refutation.text() == two.refutation.text()


class TestSoundnessFuzz:
    @settings(max_examples=40, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_proofs_check_and_are_unsat(self, rng):
        preds = {"p": 1, "q": 2}
        consts = [a, b]

        def term(scope):
            r = rng.random()
            if r < 0.4:
                return rng.choice(scope)
            if r < 0.8:
                return rng.choice(consts)
            return Fn("f", (rng.choice(scope + consts),))

        clauses = []
        for _ in range(rng.randint(2, 6)):
            scope = [Var("x"), Var("y")]
            lits = []
            for _ in range(rng.randint(1, 3)):
                pred = rng.choice(sorted(preds))
                lits.append(Literal(rng.random() < 0.5,
                                    Atom(pred, tuple(term(scope) for _ in range(preds[pred])))))
            clauses.append(make_clause(lits))
        v = prove([], clauses, ProverConfig(timeout=1.0))
        if v.proved:
            assert check_refutation(v.refutation, clauses).ok
            assert not satisfiable(clause_formulas(clauses), 3)


# -- chaining ---------------------------------------------------------------------------

def chain_family(n: int):
    names = [Fn(f"a{i}") for i in range(1, n + 1)]
    premises = [cl(pos("lt", s, t)) for s, t in zip(names, names[1:])]
    goal = [cl(neg("lt", names[0], names[-1]))]
    return premises, goal


class TestChainingBenefit:
    def test_n8_fewer_retained(self):
        premises, goal = chain_family(8)
        on = prove(premises, goal, ProverConfig(chaining=frozenset({"lt"})))
        off = prove(premises + [transitivity_axiom("lt")], goal, ProverConfig())
        assert on.proved and off.proved
        assert check_refutation(on.refutation).ok and check_refutation(off.refutation).ok
        assert on.stats["retained"] < off.stats["retained"]

    def test_axiom_withheld_when_chaining(self):
        premises, goal = chain_family(3)
        v = prove(premises + [transitivity_axiom("lt")], goal,
                  ProverConfig(chaining=frozenset({"lt"})))
        assert v.proved
        assert all(s.rule != "input" or s.clause != transitivity_axiom("lt")
                   for s in v.refutation.steps)

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_conservative_on_family(self, n):
        premises, goal = chain_family(n)
        on = prove(premises, goal, ProverConfig(chaining=frozenset({"lt"})))
        off = prove(premises + [transitivity_axiom("lt")], goal, ProverConfig(timeout=100))
        assert on.proved == off.proved

    def test_conservative_on_unprovable(self):
        premises, _ = chain_family(4)
        goal = [cl(neg("lt", Fn("a4"), Fn("a1")))]
        on = prove(premises, goal, ProverConfig(chaining=frozenset({"lt"})))
        # with the axiom the search does not terminate; it must still find nothing
        off = prove(premises + [transitivity_axiom("lt")], goal, ProverConfig(timeout=2.0))
        assert on.status is Status.SATURATED
        assert not off.proved
