"""TPTP FOF export of proof tasks, and a reader for the emitted subset.

Symbols outside the TPTP lower-word alphabet are mangled through a table
that is written into the problem as ``% symbol <mangled> = <original>``
comment lines, so a problem file can always be decoded again.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import UnencodableSymbol
from ..fol.logic import (
    FALSE, TRUE, And, Atom, Bottom, Eq, Exists, Fn, Forall, Formula, Iff, Implies, Not, Or,
    Term, Top, Var, function_symbols, predicate_symbols,
)

LOWER_WORD = re.compile(r"[a-z][A-Za-z0-9_]*\Z")
UPPER_WORD = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")

_CHAR_NAMES = {
    "<": "lt", ">": "gt", "=": "eq", "+": "plus", "-": "minus", "*": "star", "/": "slash",
    "\\": "bslash", "|": "bar", "~": "tilde", "^": "caret", "&": "amp", "!": "bang",
    ".": "dot", "'": "prime", ":": "colon", "@": "at", "#": "hash", "%": "pct", "$": "dollar",
    "?": "qmark", ",": "comma", ";": "semi", "(": "lpar", ")": "rpar", "[": "lbrack",
    "]": "rbrack", "{": "lbrace", "}": "rbrace", " ": "sp",
}


def mangle_symbol(sym: str) -> str:
    """Deterministic TPTP name for a predicate or function symbol."""
    if not sym:
        raise UnencodableSymbol("empty symbol")
    if LOWER_WORD.match(sym) and not sym.startswith(("s_", "c_")):
        return sym
    if UPPER_WORD.match(sym) or (sym[0] == "_" and re.fullmatch(r"\w+", sym)):
        return "c_" + sym
    parts = []
    for ch in sym:
        if ch.isascii() and (ch.isalnum() or ch == "_"):
            parts.append(ch)
        elif ch in _CHAR_NAMES:
            parts.append("_" + _CHAR_NAMES[ch] + "_")
        else:
            parts.append(f"_u{ord(ch):04x}_")
    return "s_" + "".join(parts).strip("_").replace("__", "_")


def _mangle_var(name: str) -> str:
    if UPPER_WORD.match(name):
        return name
    if re.fullmatch(r"[a-z][A-Za-z0-9_]*", name):
        return name[0].upper() + name[1:]
    return "V_" + re.sub(r"\W", "_", name)


def _mangle_label(label: str) -> str:
    name = re.sub(r"[^A-Za-z0-9_]", "_", label)
    if not name or not name[0].isalpha():
        name = "p_" + name
    return name[0].lower() + name[1:]


@dataclass
class Problem:
    text: str
    symbols: dict[str, str] = field(default_factory=dict)   # mangled -> original
    names: dict[str, str] = field(default_factory=dict)     # fof name -> premise label


class _Encoder:
    def __init__(self, formulas: list[Formula]):
        self.table: dict[str, str] = {}
        self.inverse: dict[str, str] = {}
        syms: set[str] = set()
        for f in formulas:
            syms |= set(predicate_symbols(f)) | set(function_symbols(f))
        for s in sorted(syms):
            m = mangle_symbol(s)
            if m in self.inverse and self.inverse[m] != s:
                raise UnencodableSymbol(
                    f"symbols {self.inverse[m]!r} and {s!r} both mangle to {m!r}")
            self.table[s] = m
            self.inverse[m] = s
        self.vars: dict[str, str] = {}
        self.used_vars: set[str] = set()

    def var(self, name: str) -> str:
        if name not in self.vars:
            base = _mangle_var(name)
            out, k = base, 1
            while out in self.used_vars:
                k += 1
                out = f"{base}_{k}"
            self.vars[name] = out
            self.used_vars.add(out)
        return self.vars[name]

    def term(self, t: Term) -> str:
        if isinstance(t, Var):
            return self.var(t.name)
        name = self.table[t.symbol]
        if not t.args:
            return name
        return f"{name}({', '.join(self.term(a) for a in t.args)})"

    def formula(self, f: Formula) -> str:
        if isinstance(f, Atom):
            name = self.table[f.pred]
            if not f.args:
                return name
            return f"{name}({', '.join(self.term(a) for a in f.args)})"
        if isinstance(f, Eq):
            return f"{self.term(f.lhs)} = {self.term(f.rhs)}"
        if isinstance(f, Top):
            return "$true"
        if isinstance(f, Bottom):
            return "$false"
        if isinstance(f, Not):
            if isinstance(f.arg, Eq):
                return f"{self.term(f.arg.lhs)} != {self.term(f.arg.rhs)}"
            return f"~ {self._sub(f.arg)}"
        if isinstance(f, (And, Or)):
            op = " & " if isinstance(f, And) else " | "
            return op.join(self._sub(a) for a in f.args)
        if isinstance(f, Implies):
            return f"{self._sub(f.lhs)} => {self._sub(f.rhs)}"
        if isinstance(f, Iff):
            return f"{self._sub(f.lhs)} <=> {self._sub(f.rhs)}"
        if isinstance(f, (Forall, Exists)):
            q = "!" if isinstance(f, Forall) else "?"
            return f"{q}[{self.var(f.var)}]: {self._sub(f.body)}"
        raise TypeError(f"not a formula: {f!r}")

    def _sub(self, f: Formula) -> str:
        text = self.formula(f)
        if isinstance(f, (Atom, Top, Bottom)):
            return text
        return f"({text})"


def encode(task) -> Problem:
    """TPTP problem for a proof task: one axiom per premise, one conjecture."""
    formulas = [p.formula for p in task.premises] + [task.goal]
    enc = _Encoder(formulas)
    lines = []
    for m in sorted(enc.inverse):
        if enc.inverse[m] != m:
            lines.append(f"% symbol {m} = {enc.inverse[m]}")
    names: dict[str, str] = {}
    taken = {"goal"}
    for p in task.premises:
        base = _mangle_label(p.label)
        name, k = base, 1
        while name in taken:
            k += 1
            name = f"{base}_{k}"
        taken.add(name)
        names[name] = p.label
        enc.vars, enc.used_vars = {}, set()
        lines.append(f"fof({name}, axiom, {enc.formula(p.formula)}).")
    enc.vars, enc.used_vars = {}, set()
    lines.append(f"fof(goal, conjecture, {enc.formula(task.goal)}).")
    return Problem("\n".join(lines) + "\n", dict(enc.inverse), names)


def to_tptp(task) -> str:
    return encode(task).text


# -- reading ----------------------------------------------------------------------

class TptpSyntaxError(ValueError):
    pass


_TOKEN = re.compile(r"""
    (?P<ws>\s+|%[^\n]*)
  | (?P<op><=>|=>|<=|<~>|~\||~&|!=|[~&|=!?:,()\[\].])
  | (?P<dollar>\$[a-z]+)
  | (?P<quoted>'(?:[^'\\]|\\.)*')
  | (?P<word>[A-Za-z0-9_]+)
""", re.VERBOSE)


def _tokens(text: str) -> list[str]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise TptpSyntaxError(f"unexpected character {text[pos]!r} at offset {pos}")
        if m.lastgroup != "ws":
            out.append(m.group())
        pos = m.end()
    return out


class _Reader:
    def __init__(self, tokens: list[str], symbols: dict[str, str]):
        self.toks = tokens
        self.i = 0
        self.symbols = symbols

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, want: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (want is not None and tok != want):
            raise TptpSyntaxError(f"expected {want or 'token'}, found {tok!r}")
        self.i += 1
        return tok

    def name(self, tok: str) -> str:
        if tok.startswith("'"):
            tok = tok[1:-1]
        return self.symbols.get(tok, tok)

    def annotated(self) -> tuple[str, str, Formula]:
        self.take("fof")
        self.take("(")
        name = self.take().strip("'")
        self.take(",")
        role = self.take()
        self.take(",")
        f = self.formula()
        self.take(")")
        self.take(".")
        return name, role, f

    def formula(self) -> Formula:
        lhs = self.unitary()
        tok = self.peek()
        if tok in ("&", "|"):
            parts = [lhs]
            while self.peek() == tok:
                self.take()
                parts.append(self.unitary())
            return And(tuple(parts)) if tok == "&" else Or(tuple(parts))
        if tok in ("=>", "<=", "<=>", "<~>", "~|", "~&"):
            self.take()
            rhs = self.unitary()
            if tok == "=>":
                return Implies(lhs, rhs)
            if tok == "<=":
                return Implies(rhs, lhs)
            if tok == "<=>":
                return Iff(lhs, rhs)
            if tok == "<~>":
                return Not(Iff(lhs, rhs))
            return Not(Or((lhs, rhs)) if tok == "~|" else And((lhs, rhs)))
        return lhs

    def unitary(self) -> Formula:
        tok = self.peek()
        if tok == "(":
            self.take()
            f = self.formula()
            self.take(")")
            return f
        if tok == "~":
            self.take()
            return Not(self.unitary())
        if tok in ("!", "?"):
            self.take()
            self.take("[")
            names = [self.take()]
            while self.peek() == ",":
                self.take()
                names.append(self.take())
            self.take("]")
            self.take(":")
            body = self.unitary()
            for v in reversed(names):
                body = Forall(v, body) if tok == "!" else Exists(v, body)
            return body
        if tok == "$true":
            self.take()
            return TRUE
        if tok == "$false":
            self.take()
            return FALSE
        lhs = self.term()
        if self.peek() in ("=", "!="):
            op = self.take()
            rhs = self.term()
            return Eq(lhs, rhs) if op == "=" else Not(Eq(lhs, rhs))
        if isinstance(lhs, Var):
            raise TptpSyntaxError(f"variable {lhs.name} used as a formula")
        return Atom(lhs.symbol, lhs.args)

    def term(self) -> Term:
        tok = self.take()
        if UPPER_WORD.match(tok):
            return Var(tok)
        if not (tok.startswith("'") or re.fullmatch(r"[a-z0-9][A-Za-z0-9_]*", tok)):
            raise TptpSyntaxError(f"expected a term, found {tok!r}")
        args = []
        if self.peek() == "(":
            self.take()
            args.append(self.term())
            while self.peek() == ",":
                self.take()
                args.append(self.term())
            self.take(")")
        return Fn(self.name(tok), tuple(args))


_SYMBOL_LINE = re.compile(r"^% symbol (\S+) = (.+)$", re.MULTILINE)


def read_tptp(text: str) -> list[tuple[str, str, Formula]]:
    """(name, role, formula) triples; mangled symbols are decoded via the table."""
    symbols = {m.group(1): m.group(2) for m in _SYMBOL_LINE.finditer(text)}
    r = _Reader(_tokens(text), symbols)
    out = []
    while r.peek() is not None:
        out.append(r.annotated())
    return out
