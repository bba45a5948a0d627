"""Classic first-order problems without equality, in TPTP FOF syntax.

Pelletier's problem numbers are kept in the names; the remaining entries
are syllogisms and textbook puzzles. Every problem is a theorem.
"""

from __future__ import annotations

from ftlverify.bridge import read_tptp
from ftlverify.fol import clausify

PROBLEMS = {
    "pel01": "fof(c, conjecture, (p => q) <=> (~q => ~p)).",
    "pel02": "fof(c, conjecture, ~~p <=> p).",
    "pel03": "fof(c, conjecture, ~(p => q) => (q => p)).",
    "pel04": "fof(c, conjecture, (~p => q) <=> (~q => p)).",
    "pel05": "fof(c, conjecture, ((p | q) => (p | r)) => (p | (q => r))).",
    "pel08": "fof(c, conjecture, ((p => q) => p) => p).",
    "pel09": "fof(c, conjecture, ((p | q) & (~p | q) & (p | ~q)) => ~(~p | ~q)).",
    "pel12": "fof(c, conjecture, ((p <=> q) <=> r) <=> (p <=> (q <=> r))).",
    "pel17": "fof(c, conjecture, ((p & (q => r)) => s) <=> ((~p | q | s) & (~p | ~r | s))).",
    "pel18": "fof(c, conjecture, ?[Y]: ![X]: (f(Y) => f(X))).",
    "pel19": "fof(c, conjecture, ?[X]: ![Y, Z]: ((p(Y) => q(Z)) => (p(X) => q(X)))).",
    "pel20": """
        fof(c, conjecture, (![X, Y]: ?[Z]: ![W]: ((p(X) & q(Y)) => (r(Z) & s(W))))
                           => (?[X, Y]: (p(X) & q(Y)) => ?[Z]: r(Z))).""",
    "pel21": """
        fof(a1, axiom, ?[X]: (p => f(X))).
        fof(a2, axiom, ?[X]: (f(X) => p)).
        fof(c, conjecture, ?[X]: (p <=> f(X))).""",
    "pel22": "fof(c, conjecture, ![X]: (p <=> f(X)) => (p <=> ![X]: f(X))).",
    "pel23": "fof(c, conjecture, ![X]: (p | f(X)) <=> (p | ![X]: f(X))).",
    "pel24": """
        fof(a1, axiom, ~?[X]: (s(X) & q(X))).
        fof(a2, axiom, ![X]: (p(X) => (q(X) | r(X)))).
        fof(a3, axiom, ~?[X]: p(X) => ?[X]: q(X)).
        fof(a4, axiom, ![X]: ((q(X) | r(X)) => s(X))).
        fof(c, conjecture, ?[X]: (p(X) & r(X))).""",
    "pel25": """
        fof(a1, axiom, ?[X]: p(X)).
        fof(a2, axiom, ![X]: (f(X) => (~g(X) & r(X)))).
        fof(a3, axiom, ![X]: (p(X) => (g(X) & f(X)))).
        fof(a4, axiom, ![X]: (p(X) => q(X)) | ?[X]: (p(X) & r(X))).
        fof(c, conjecture, ?[X]: (q(X) & p(X))).""",
    "pel26": """
        fof(a1, axiom, ?[X]: p(X) <=> ?[X]: q(X)).
        fof(a2, axiom, ![X, Y]: ((p(X) & q(Y)) => (r(X) <=> s(Y)))).
        fof(c, conjecture, ![X]: (p(X) => r(X)) <=> ![X]: (q(X) => s(X))).""",
    "pel27": """
        fof(a1, axiom, ?[X]: (f(X) & ~g(X))).
        fof(a2, axiom, ![X]: (f(X) => h(X))).
        fof(a3, axiom, ![X]: ((j(X) & i(X)) => f(X))).
        fof(a4, axiom, ?[X]: (h(X) & ~g(X)) => ![X]: (i(X) => ~h(X))).
        fof(c, conjecture, ![X]: (j(X) => ~i(X))).""",
    "pel28": """
        fof(a1, axiom, ![X]: (p(X) => ![X]: q(X))).
        fof(a2, axiom, ![X]: (q(X) | r(X)) => ?[X]: (q(X) & s(X))).
        fof(a3, axiom, ?[X]: s(X) => ![X]: (f(X) => g(X))).
        fof(c, conjecture, ![X]: ((p(X) & f(X)) => g(X))).""",
    "pel29": """
        fof(a1, axiom, ?[X]: f(X) & ?[X]: g(X)).
        fof(c, conjecture, (![X]: (f(X) => h(X)) & ![X]: (g(X) => j(X)))
                           <=> ![X, Y]: ((f(X) & g(Y)) => (h(X) & j(Y)))).""",
    "pel30": """
        fof(a1, axiom, ![X]: ((f(X) | g(X)) => ~h(X))).
        fof(a2, axiom, ![X]: ((g(X) => ~i(X)) => (f(X) & h(X)))).
        fof(c, conjecture, ![X]: i(X)).""",
    "pel31": """
        fof(a1, axiom, ~?[X]: (f(X) & (g(X) | h(X)))).
        fof(a2, axiom, ?[X]: (i(X) & f(X))).
        fof(a3, axiom, ![X]: (~h(X) => j(X))).
        fof(c, conjecture, ?[X]: (i(X) & j(X))).""",
    "pel32": """
        fof(a1, axiom, ![X]: ((f(X) & (g(X) | h(X))) => i(X))).
        fof(a2, axiom, ![X]: ((i(X) & h(X)) => j(X))).
        fof(a3, axiom, ![X]: (k(X) => h(X))).
        fof(c, conjecture, ![X]: ((f(X) & k(X)) => j(X))).""",
    "pel33": """
        fof(c, conjecture, ![X]: ((p(a) & (p(X) => p(b))) => p(c))
                           <=> ![X]: ((~p(a) | p(X) | p(c)) & (~p(a) | ~p(b) | p(c)))).""",
    "pel35": "fof(c, conjecture, ?[X, Y]: (p(X, Y) => ![X, Y]: p(X, Y))).",
    "pel39": "fof(c, conjecture, ~?[X]: ![Y]: (f(Y, X) <=> ~f(Y, Y))).",
    "pel40": """
        fof(c, conjecture, ?[Y]: ![X]: (f(X, Y) <=> f(X, X))
                           => ~![X]: ?[Y]: ![Z]: (f(Z, Y) <=> ~f(Z, X))).""",
    "pel42": "fof(c, conjecture, ~?[Y]: ![X]: (f(X, Y) <=> ~?[Z]: (f(X, Z) & f(Z, X)))).",
    "pel43": """
        fof(a1, axiom, ![X, Y]: (q(X, Y) <=> ![Z]: (f(Z, X) <=> f(Z, Y)))).
        fof(c, conjecture, ![X, Y]: (q(X, Y) <=> q(Y, X))).""",
    "drinker": "fof(c, conjecture, ?[X]: (drinks(X) => ![Y]: drinks(Y))).",
    "barber": """
        fof(c, conjecture, ~?[X]: (barber(X) & ![Y]: (shaves(X, Y) <=> ~shaves(Y, Y)))).""",
    "barbara": """
        fof(a1, axiom, ![X]: (man(X) => mortal(X))).
        fof(a2, axiom, man(socrates)).
        fof(c, conjecture, mortal(socrates)).""",
    "celarent": """
        fof(a1, axiom, ![X]: (reptile(X) => ~furry(X))).
        fof(a2, axiom, ![X]: (snake(X) => reptile(X))).
        fof(c, conjecture, ![X]: (snake(X) => ~furry(X))).""",
    "darii": """
        fof(a1, axiom, ![X]: (rabbit(X) => furry(X))).
        fof(a2, axiom, ?[X]: (pet(X) & rabbit(X))).
        fof(c, conjecture, ?[X]: (pet(X) & furry(X))).""",
    "ferio": """
        fof(a1, axiom, ![X]: (homework(X) => ~fun(X))).
        fof(a2, axiom, ?[X]: (reading(X) & homework(X))).
        fof(c, conjecture, ?[X]: (reading(X) & ~fun(X))).""",
    "successor_chain": """
        fof(a1, axiom, ![X]: (even(X) => odd(s(X)))).
        fof(a2, axiom, ![X]: (odd(X) => even(s(X)))).
        fof(a3, axiom, even(zero)).
        fof(c, conjecture, even(s(s(s(s(zero)))))).""",
    "quantifier_swap": """
        fof(c, conjecture, ?[X]: ![Y]: r(X, Y) => ![Y]: ?[X]: r(X, Y)).""",
    "relational_composition": """
        fof(a1, axiom, ![X]: ?[Y]: parent(X, Y)).
        fof(a2, axiom, ![X, Y, Z]: ((parent(X, Y) & parent(Y, Z)) => grand(X, Z))).
        fof(c, conjecture, ![X]: ?[Z]: grand(X, Z)).""",
}


def problem_clauses(text: str):
    """Premise clauses and negated-conjecture clauses of a problem."""
    items = read_tptp(text)
    axioms = [f for _, role, f in items if role != "conjecture"]
    conj = [f for _, role, f in items if role == "conjecture"]
    assert len(conj) == 1
    return clausify(axioms, conj[0])
