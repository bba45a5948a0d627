"""Inference rules on clauses: resolution, factoring, chaining.

Each rule renames its premises apart (left copy ``L``, right copy ``R``)
before unifying, so callers may pass clauses that share variable names.
Results carry the unifier and literal indices needed to re-check them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..fol.logic import Atom, Clause, Literal, Term, Var, make_clause, rename_clause, subst_atom
from ..fol.unify import Substitution, UnificationFailure, mgu, unify


@dataclass(frozen=True)
class Inference:
    rule: str                       # resolution | factoring | chaining
    clause: Clause
    parents: tuple[int, ...]        # positions in the caller's argument list (0 or 0,1)
    literals: tuple                 # rule-specific literal indices
    unifier: Substitution = field(default_factory=dict, compare=False)
    relation: str | None = None
    mode: str | None = None         # chaining: pos | neg-left | neg-right


def rename_apart(c: Clause, prefix: str) -> Clause:
    return rename_clause(c, {v: f"{prefix}{i}" for i, v in enumerate(c.variables(), 1)})


def _apply(lits, sigma) -> list[Literal]:
    return [Literal(l.positive, subst_atom(l.atom, sigma)) for l in lits]


def _atom_unify(a, b, sigma=None) -> Substitution | None:
    try:
        return unify(a, b, sigma)
    except UnificationFailure:
        return None


def resolve(c1: Clause, c2: Clause, i: int, j: int | tuple[int, ...]) -> Clause | None:
    """Resolvent on literal ``i`` of c1 and literal(s) ``j`` of c2, or None."""
    inf = resolve_inference(c1, c2, i, (j,) if isinstance(j, int) else tuple(j))
    return None if inf is None else inf.clause


def resolve_inference(c1: Clause, c2: Clause, i: int, js: tuple[int, ...]) -> Inference | None:
    left, right = rename_apart(c1, "L"), rename_apart(c2, "R")
    lit = left.literals[i]
    sigma: Substitution | None = {}
    for j in js:
        other = right.literals[j]
        if other.positive == lit.positive:
            return None
        sigma = _atom_unify(lit.atom, other.atom, sigma)
        if sigma is None:
            return None
    rest = [l for k, l in enumerate(left.literals) if k != i]
    rest += [l for k, l in enumerate(right.literals) if k not in js]
    clause = make_clause(_apply(rest, sigma), "derived")
    return Inference("resolution", clause, (0, 1), (i, js), sigma)


def factor_inference(c: Clause, i: int, j: int) -> Inference | None:
    left = rename_apart(c, "L")
    a, b = left.literals[i], left.literals[j]
    if a.positive != b.positive:
        return None
    sigma = mgu(a.atom, b.atom)
    if sigma is None:
        return None
    rest = [l for k, l in enumerate(left.literals) if k != j]
    return Inference("factoring", make_clause(_apply(rest, sigma), "derived"), (0,), (i, j), sigma)


def factor(c: Clause, i: int, j: int) -> Clause | None:
    inf = factor_inference(c, i, j)
    return None if inf is None else inf.clause


def chain_inference(c1: Clause, c2: Clause, i: int, j: int, rel: str,
                    mode: str = "pos") -> Inference | None:
    """Transitivity-replacing inference on literal i of c1 and j of c2.

    pos:        r(s,t) | C   and  r(t',u) | D   gives  r(s,u) | C | D
    neg-left:  ~r(s,u) | C   and  r(s',t) | D   gives ~r(t,u) | C | D
    neg-right: ~r(s,u) | C   and  r(t',u') | D  gives ~r(s,t') | C | D
    """
    left, right = rename_apart(c1, "L"), rename_apart(c2, "R")
    a, b = left.literals[i], right.literals[j]
    if a.atom.pred != rel or b.atom.pred != rel or not b.positive:
        return None
    if len(a.atom.args) != 2 or len(b.atom.args) != 2:
        return None
    (s, t), (t2, u) = a.atom.args, b.atom.args
    if mode == "pos":
        if not a.positive:
            return None
        sigma = _atom_unify(t, t2)
        new = Literal(True, Atom(rel, (s, u)))
    elif mode == "neg-left":
        if a.positive:
            return None
        sigma = _atom_unify(s, t2)                  # s ~ s'
        new = Literal(False, Atom(rel, (u, t)))     # ~r(t_b, u_a)
    elif mode == "neg-right":
        if a.positive:
            return None
        sigma = _atom_unify(t, u)                   # u ~ u'
        new = Literal(False, Atom(rel, (s, t2)))
    else:
        raise ValueError(f"unknown chaining mode {mode}")
    if sigma is None:
        return None
    rest = [l for k, l in enumerate(left.literals) if k != i]
    rest += [l for k, l in enumerate(right.literals) if k != j]
    clause = make_clause(_apply([new] + rest, sigma), "derived")
    return Inference("chaining", clause, (0, 1), (i, j), sigma, rel, mode)


def chain(c1: Clause, c2: Clause, rel: str) -> Clause | None:
    """First positive chaining result of c1 with c2 on ``rel``, or None."""
    for i, a in enumerate(c1.literals):
        for j, b in enumerate(c2.literals):
            if a.positive and b.positive:
                inf = chain_inference(c1, c2, i, j, rel, "pos")
                if inf is not None:
                    return inf.clause
    return None


# -- generation for the given-clause loop ---------------------------------------

def resolvents(given: Clause, partner: Clause, max_partner_literals: int = 3) -> list[Inference]:
    """All resolvents of ``given`` with ``partner``.

    Several partner literals may be resolved at once (partner-side
    factoring), so unit premises never need a separate factoring step.
    """
    out = []
    right = rename_apart(partner, "R")
    left = rename_apart(given, "L")
    for i, lit in enumerate(left.literals):
        candidates = [j for j, other in enumerate(right.literals)
                      if other.positive != lit.positive and other.atom.pred == lit.atom.pred
                      and len(other.atom.args) == len(lit.atom.args)
                      and _atom_unify(lit.atom, other.atom) is not None]
        for size in range(1, min(len(candidates), max_partner_literals) + 1):
            for js in combinations(candidates, size):
                inf = resolve_inference(given, partner, i, js)
                if inf is not None:
                    out.append(inf)
    return out


def factors(c: Clause) -> list[Inference]:
    out = []
    for i, j in combinations(range(len(c)), 2):
        a, b = c.literals[i], c.literals[j]
        if a.positive == b.positive and a.atom.pred == b.atom.pred:
            inf = factor_inference(c, i, j)
            if inf is not None:
                out.append(inf)
    return out


def chainings(c1: Clause, c2: Clause, relations: frozenset[str]) -> list[Inference]:
    out = []
    for i, a in enumerate(c1.literals):
        if a.atom.pred not in relations:
            continue
        for j, b in enumerate(c2.literals):
            if b.atom.pred != a.atom.pred or not b.positive:
                continue
            modes = ("pos",) if a.positive else ("neg-left", "neg-right")
            for mode in modes:
                inf = chain_inference(c1, c2, i, j, a.atom.pred, mode)
                if inf is not None:
                    out.append(inf)
    return out


def is_tautology(c: Clause) -> bool:
    lits = set(c.literals)
    return any(l.negate() in lits for l in c.literals if l.positive)


def _match_args(ps, ts, sigma: dict) -> dict | None:
    """One-way matching of argument tuples, extending a copy of ``sigma``."""
    sigma = dict(sigma)
    stack = list(zip(ps, ts))
    while stack:
        p, t = stack.pop()
        if type(p) is Var:
            bound = sigma.get(p.name)
            if bound is None:
                sigma[p.name] = t
            elif bound != t:
                return None
        elif type(t) is Var or p.symbol != t.symbol or len(p.args) != len(t.args):
            return None
        elif p.args:
            stack.extend(zip(p.args, t.args))
    return sigma


def subsumes(c: Clause, d: Clause) -> bool:
    """True iff some substitution maps the literals of c to distinct literals of d.

    Multiset subsumption: distinct literals of c must land on distinct
    literals of d. Factoring covers the cases this leaves out.
    """
    if len(c) > len(d):
        return False
    by_key: dict[tuple[bool, str], list[int]] = {}
    for k, l in enumerate(d.literals):
        by_key.setdefault((l.positive, l.atom.pred), []).append(k)
    options = []
    for l in c.literals:
        cands = [k for k in by_key.get((l.positive, l.atom.pred), ())
                 if _match_args(l.atom.args, d.literals[k].atom.args, {}) is not None]
        if not cands:
            return False
        options.append((l, cands))
    options.sort(key=lambda o: len(o[1]))
    used: set[int] = set()

    def search(i: int, sigma: dict[str, Term]) -> bool:
        if i == len(options):
            return True
        l, cands = options[i]
        for k in cands:
            if k in used:
                continue
            ext = _match_args(l.atom.args, d.literals[k].atom.args, sigma)
            if ext is not None:
                used.add(k)
                if search(i + 1, ext):
                    return True
                used.discard(k)
        return False

    return search(0, {})


def is_variant(c: Clause, d: Clause) -> bool:
    return len(set(c.literals)) == len(set(d.literals)) and subsumes(c, d) and subsumes(d, c)
