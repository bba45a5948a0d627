"""First-order terms, formulas and clauses.

All objects are immutable and hashable. ``str()`` yields the canonical
text used in golden files (TPTP-flavoured, e.g. ``![x]: (p(x) => q(x))``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Union


# -- terms --------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Fn:
    """Function application; constants are 0-ary functions."""

    symbol: str
    args: tuple["Term", ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.symbol
        return f"{self.symbol}({','.join(map(str, self.args))})"


Term = Union[Var, Fn]


# -- formulas -----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Atom:
    pred: str
    args: tuple[Term, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.pred
        return f"{self.pred}({','.join(map(str, self.args))})"


@dataclass(frozen=True, slots=True)
class Eq:
    lhs: Term
    rhs: Term

    @property
    def pred(self) -> str:
        return "="

    @property
    def args(self) -> tuple[Term, Term]:
        return (self.lhs, self.rhs)

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True, slots=True)
class Not:
    arg: "Formula"

    def __str__(self) -> str:
        if isinstance(self.arg, Eq):
            return f"{self.arg.lhs} != {self.arg.rhs}"
        return f"~{_wrap(self.arg)}"


@dataclass(frozen=True, slots=True)
class And:
    args: tuple["Formula", ...]

    def __str__(self) -> str:
        return "(" + " & ".join(_wrap(a) for a in self.args) + ")"


@dataclass(frozen=True, slots=True)
class Or:
    args: tuple["Formula", ...]

    def __str__(self) -> str:
        return "(" + " | ".join(_wrap(a) for a in self.args) + ")"


@dataclass(frozen=True, slots=True)
class Implies:
    lhs: "Formula"
    rhs: "Formula"

    def __str__(self) -> str:
        return f"({_wrap(self.lhs)} => {_wrap(self.rhs)})"


@dataclass(frozen=True, slots=True)
class Iff:
    lhs: "Formula"
    rhs: "Formula"

    def __str__(self) -> str:
        return f"({_wrap(self.lhs)} <=> {_wrap(self.rhs)})"


@dataclass(frozen=True, slots=True)
class Forall:
    var: str
    body: "Formula"

    def __str__(self) -> str:
        return f"![{self.var}]: {_wrap(self.body)}"


@dataclass(frozen=True, slots=True)
class Exists:
    var: str
    body: "Formula"

    def __str__(self) -> str:
        return f"?[{self.var}]: {_wrap(self.body)}"


@dataclass(frozen=True, slots=True)
class Top:
    def __str__(self) -> str:
        return "$true"


@dataclass(frozen=True, slots=True)
class Bottom:
    def __str__(self) -> str:
        return "$false"


TRUE, FALSE = Top(), Bottom()

Formula = Union[Atom, Eq, Not, And, Or, Implies, Iff, Forall, Exists, Top, Bottom]
AtomLike = Union[Atom, Eq]


def _wrap(f: Formula) -> str:
    text = str(f)
    if isinstance(f, Eq):
        return f"({text})"
    return text


def conj(*fs: Formula) -> Formula:
    """n-ary conjunction with flattening and unit simplification."""
    out: list[Formula] = []
    for f in fs:
        if isinstance(f, Top):
            continue
        if isinstance(f, Bottom):
            return FALSE
        out.extend(f.args if isinstance(f, And) else (f,))
    if not out:
        return TRUE
    return out[0] if len(out) == 1 else And(tuple(out))


def disj(*fs: Formula) -> Formula:
    out: list[Formula] = []
    for f in fs:
        if isinstance(f, Bottom):
            continue
        if isinstance(f, Top):
            return TRUE
        out.extend(f.args if isinstance(f, Or) else (f,))
    if not out:
        return FALSE
    return out[0] if len(out) == 1 else Or(tuple(out))


def forall(names: Iterable[str], body: Formula) -> Formula:
    for n in reversed(list(names)):
        body = Forall(n, body)
    return body


def exists(names: Iterable[str], body: Formula) -> Formula:
    for n in reversed(list(names)):
        body = Exists(n, body)
    return body


# -- traversal ----------------------------------------------------------------

def term_vars(t: Term, out: list[str] | None = None) -> list[str]:
    out = [] if out is None else out
    if isinstance(t, Var):
        if t.name not in out:
            out.append(t.name)
    else:
        for a in t.args:
            term_vars(a, out)
    return out


def free_vars(f: Formula) -> list[str]:
    """Free variables in order of first occurrence."""
    out: list[str] = []

    def walk(g: Formula, bound: frozenset[str]) -> None:
        if isinstance(g, (Atom, Eq)):
            for a in g.args:
                for v in term_vars(a):
                    if v not in bound and v not in out:
                        out.append(v)
        elif isinstance(g, Not):
            walk(g.arg, bound)
        elif isinstance(g, (And, Or)):
            for a in g.args:
                walk(a, bound)
        elif isinstance(g, (Implies, Iff)):
            walk(g.lhs, bound)
            walk(g.rhs, bound)
        elif isinstance(g, (Forall, Exists)):
            walk(g.body, bound | {g.var})

    walk(f, frozenset())
    return out


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.arg)
    elif isinstance(f, (And, Or)):
        for a in f.args:
            yield from subformulas(a)
    elif isinstance(f, (Implies, Iff)):
        yield from subformulas(f.lhs)
        yield from subformulas(f.rhs)
    elif isinstance(f, (Forall, Exists)):
        yield from subformulas(f.body)


def atoms(f: Formula) -> Iterator[AtomLike]:
    for g in subformulas(f):
        if isinstance(g, (Atom, Eq)):
            yield g


def _term_symbols(t: Term, out: dict[str, int]) -> None:
    if isinstance(t, Fn):
        out.setdefault(t.symbol, len(t.args))
        for a in t.args:
            _term_symbols(a, out)


def function_symbols(f: Formula) -> dict[str, int]:
    out: dict[str, int] = {}
    for a in atoms(f):
        for t in a.args:
            _term_symbols(t, out)
    return out


def predicate_symbols(f: Formula) -> dict[str, int]:
    out: dict[str, int] = {}
    for a in atoms(f):
        if isinstance(a, Atom):
            out.setdefault(a.pred, len(a.args))
    return out


def symbols(f: Formula) -> list[str]:
    """Non-logical symbols (predicates, then functions), equality excluded."""
    return list(predicate_symbols(f)) + [s for s in function_symbols(f)
                                         if s not in predicate_symbols(f)]


def check_arities(formulas: Iterable[Formula]) -> None:
    """Raise ValueError if a symbol is used with two different arities."""
    seen: dict[tuple[str, str], int] = {}
    for f in formulas:
        for kind, table in (("predicate", predicate_symbols(f)), ("function", function_symbols(f))):
            for s, n in table.items():
                if seen.setdefault((kind, s), n) != n:
                    raise ValueError(f"{kind} {s} used with arities {seen[(kind, s)]} and {n}")


# -- substitution ---------------------------------------------------------------

def subst_term(t: Term, sigma: dict[str, Term]) -> Term:
    if isinstance(t, Var):
        return sigma.get(t.name, t)
    if not t.args:
        return t
    return Fn(t.symbol, tuple(subst_term(a, sigma) for a in t.args))


def subst_atom(a: AtomLike, sigma: dict[str, Term]) -> AtomLike:
    if isinstance(a, Eq):
        return Eq(subst_term(a.lhs, sigma), subst_term(a.rhs, sigma))
    if not a.args:
        return a
    return Atom(a.pred, tuple(subst_term(t, sigma) for t in a.args))


class NameSupply:
    """Deterministic source of fresh names ``<prefix><n>``."""

    def __init__(self, prefix: str, taken: Iterable[str] = (), start: int = 1):
        self.prefix = prefix
        self.taken = set(taken)
        self._counter = itertools.count(start)

    def __call__(self) -> str:
        while True:
            name = f"{self.prefix}{next(self._counter)}"
            if name not in self.taken:
                self.taken.add(name)
                return name


def substitute(f: Formula, sigma: dict[str, Term]) -> Formula:
    """Capture-avoiding substitution of free variables."""
    if not sigma:
        return f
    if isinstance(f, (Atom, Eq)):
        return subst_atom(f, sigma)
    if isinstance(f, Not):
        return Not(substitute(f.arg, sigma))
    if isinstance(f, And):
        return And(tuple(substitute(a, sigma) for a in f.args))
    if isinstance(f, Or):
        return Or(tuple(substitute(a, sigma) for a in f.args))
    if isinstance(f, Implies):
        return Implies(substitute(f.lhs, sigma), substitute(f.rhs, sigma))
    if isinstance(f, Iff):
        return Iff(substitute(f.lhs, sigma), substitute(f.rhs, sigma))
    if isinstance(f, (Forall, Exists)):
        inner = {k: v for k, v in sigma.items() if k != f.var}
        if not inner:
            return f
        incoming = set()
        for k, v in inner.items():
            incoming.update(term_vars(v))
        var, body = f.var, f.body
        if var in incoming:
            avoid = incoming | set(free_vars(body)) | set(inner)
            fresh = NameSupply(var + "_", avoid)()
            body = substitute(body, {var: Var(fresh)})
            var = fresh
        return type(f)(var, substitute(body, inner))
    return f


def alpha_equal(f: Formula, g: Formula) -> bool:
    """Syntactic equality up to renaming of bound variables."""
    return _canon(f, {}, [0]) == _canon(g, {}, [0])


def _canon(f: Formula, env: dict[str, str], counter: list[int]):
    if isinstance(f, (Atom, Eq)):
        return subst_atom(f, {k: Var(v) for k, v in env.items()})
    if isinstance(f, Not):
        return ("not", _canon(f.arg, env, counter))
    if isinstance(f, (And, Or)):
        return (type(f).__name__, tuple(_canon(a, env, counter) for a in f.args))
    if isinstance(f, (Implies, Iff)):
        return (type(f).__name__, _canon(f.lhs, env, counter), _canon(f.rhs, env, counter))
    if isinstance(f, (Forall, Exists)):
        counter[0] += 1
        name = f"#b{counter[0]}"
        return (type(f).__name__, _canon(f.body, {**env, f.var: name}, counter))
    return f


# -- clauses --------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Literal:
    positive: bool
    atom: AtomLike

    def negate(self) -> "Literal":
        return Literal(not self.positive, self.atom)

    def __str__(self) -> str:
        if self.positive:
            return str(self.atom)
        if isinstance(self.atom, Eq):
            return f"{self.atom.lhs} != {self.atom.rhs}"
        return f"~{self.atom}"


@dataclass(frozen=True, slots=True)
class Clause:
    literals: tuple[Literal, ...]
    source: str = "premise"        # premise | goal | derived

    def __len__(self) -> int:
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    @property
    def is_empty(self) -> bool:
        return not self.literals

    def variables(self) -> list[str]:
        out: list[str] = []
        for lit in self.literals:
            for t in lit.atom.args:
                term_vars(t, out)
        return out

    def has_equality(self) -> bool:
        return any(isinstance(l.atom, Eq) for l in self.literals)

    def __str__(self) -> str:
        return clause_text(self)


def make_clause(literals: Iterable[Literal], source: str = "premise") -> Clause:
    """Build a clause, dropping duplicate literals (order kept)."""
    out: list[Literal] = []
    for lit in literals:
        if lit not in out:
            out.append(lit)
    return Clause(tuple(out), source)


def rename_clause(c: Clause, mapping: dict[str, str]) -> Clause:
    sigma = {k: Var(v) for k, v in mapping.items()}
    return Clause(tuple(Literal(l.positive, subst_atom(l.atom, sigma)) for l in c.literals),
                  c.source)


def normalize_vars(c: Clause, prefix: str = "X") -> Clause:
    """Rename variables to ``X1, X2, ...`` in order of first occurrence."""
    mapping = {v: f"{prefix}{i}" for i, v in enumerate(c.variables(), 1)}
    return rename_clause(c, mapping)


def clause_text(c: Clause) -> str:
    if not c.literals:
        return "$false"
    return " | ".join(str(l) for l in normalize_vars(c).literals)


def clause_formula(c: Clause) -> Formula:
    """Universal closure of the clause as a formula."""
    lits = [l.atom if l.positive else Not(l.atom) for l in c.literals]
    return forall(c.variables(), disj(*lits))


def term_size(t: Term) -> int:
    if isinstance(t, Var):
        return 1
    return 1 + sum(term_size(a) for a in t.args)


def clause_weight(c: Clause) -> int:
    return sum(1 + sum(term_size(t) for t in l.atom.args) for l in c.literals)
