"""Syntactic unification and matching.

Substitutions are plain dicts ``name -> Term`` kept in idempotent
(fully resolved) form.
"""

from __future__ import annotations

from .logic import Atom, AtomLike, Eq, Fn, Term, Var, subst_atom, subst_term

Substitution = dict[str, Term]


class UnificationFailure(Exception):
    pass


class Clash(UnificationFailure):
    pass


class OccursCheck(UnificationFailure):
    pass


def _as_fn(x: Term | AtomLike) -> Term:
    # atoms unify like terms headed by their predicate; '=' cannot clash with a user predicate
    if isinstance(x, Eq):
        return Fn("=", (x.lhs, x.rhs))
    if isinstance(x, Atom):
        return Fn("#" + x.pred, x.args)
    return x


def _walk(t: Term, sigma: Substitution) -> Term:
    while isinstance(t, Var) and t.name in sigma:
        t = sigma[t.name]
    return t


def _occurs(name: str, t: Term, sigma: Substitution) -> bool:
    stack = [t]
    while stack:
        u = _walk(stack.pop(), sigma)
        if isinstance(u, Var):
            if u.name == name:
                return True
        else:
            stack.extend(u.args)
    return False


def _resolve(t: Term, sigma: Substitution) -> Term:
    t = _walk(t, sigma)
    if isinstance(t, Var) or not t.args:
        return t
    return Fn(t.symbol, tuple(_resolve(a, sigma) for a in t.args))


def unify(s: Term | AtomLike, t: Term | AtomLike,
          sigma: Substitution | None = None) -> Substitution:
    """Most general unifier of ``s`` and ``t`` (extending ``sigma``).

    Raises Clash on a symbol mismatch and OccursCheck on a cyclic binding.
    """
    bindings: Substitution = dict(sigma) if sigma else {}
    stack = [(_as_fn(s), _as_fn(t))]
    while stack:
        a, b = stack.pop()
        a, b = _walk(a, bindings), _walk(b, bindings)
        if a == b:
            continue
        if isinstance(a, Var):
            if _occurs(a.name, b, bindings):
                raise OccursCheck(f"{a} occurs in {b}")
            bindings[a.name] = b
        elif isinstance(b, Var):
            if _occurs(b.name, a, bindings):
                raise OccursCheck(f"{b} occurs in {a}")
            bindings[b.name] = a
        else:
            if a.symbol != b.symbol or len(a.args) != len(b.args):
                raise Clash(f"{a} vs {b}")
            stack.extend(zip(reversed(a.args), reversed(b.args)))
    return {k: _resolve(v, bindings) for k, v in bindings.items()}


def mgu(s: Term | AtomLike, t: Term | AtomLike) -> Substitution | None:
    """Like :func:`unify` but returns None instead of raising."""
    try:
        return unify(s, t)
    except UnificationFailure:
        return None


def match(pattern: Term | AtomLike, target: Term | AtomLike,
          sigma: Substitution | None = None) -> Substitution | None:
    """One-way matcher: sigma with pattern·sigma == target, target untouched."""
    bindings: Substitution = dict(sigma) if sigma else {}
    stack = [(_as_fn(pattern), _as_fn(target))]
    while stack:
        p, t = stack.pop()
        if isinstance(p, Var):
            bound = bindings.get(p.name)
            if bound is None:
                bindings[p.name] = t
            elif bound != t:
                return None
        elif isinstance(t, Var) or p.symbol != t.symbol or len(p.args) != len(t.args):
            return None
        else:
            stack.extend(zip(p.args, t.args))
    return bindings


def apply(x, sigma: Substitution):
    if isinstance(x, (Atom, Eq)):
        return subst_atom(x, sigma)
    return subst_term(x, sigma)


def is_idempotent(sigma: Substitution) -> bool:
    return all(apply(v, sigma) == v for v in sigma.values())
