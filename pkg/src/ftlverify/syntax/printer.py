"""Canonical pretty-printer; its output reparses to an equal tree."""

from __future__ import annotations

from .ast import (
    And, Axiom, CaseBlock, Claim, Definition, Document, FnApp, HasAdjective, Iff,
    Implies, IsNotion, LetDecl, Not, NotionPhrase, Or, PatternDecl, PredicateApp,
    ProofBlock, QuantifiedNotion, Relation, Signature, Statement, Step, Term, Var,
)
from .vocab import NOTION, SLOT, Pattern


def print_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    p = t.pattern
    if p.infix:
        return f"({_arg(t.args[0])} {p.shape[1]} {_arg(t.args[1])})"
    return _fill(p.shape, t.args)


def _arg(t: Term) -> str:
    text = print_term(t)
    if isinstance(t, FnApp) and t.args and not text.startswith("("):
        return f"({text})"
    return text


def _fill(shape: tuple[str, ...], args) -> str:
    it = iter(args)
    return " ".join(_arg(next(it)) if item == SLOT else item for item in shape)


def print_phrase(ph: NotionPhrase, with_name: bool = True) -> str:
    words = []
    for adj in ph.adjectives:
        words.extend(adj.adjective_words)
    words.append(_fill(ph.notion.shape, ph.args))
    if with_name and ph.var is not None:
        words.append(ph.var)
    return " ".join(words)


def print_statement(s: Statement) -> str:
    if isinstance(s, QuantifiedNotion):
        if s.scope is None:
            q = "no" if s.quantifier == "no" else "a"
            return f"(there is {q} {print_phrase(s.phrase)})"
        return f"(for {s.quantifier} {print_phrase(s.phrase)}, {print_statement(s.scope)})"
    if isinstance(s, PredicateApp):
        return _fill(s.pattern.shape, s.args)
    if isinstance(s, IsNotion):
        return f"{_arg(s.subject)} is a {print_phrase(s.phrase, with_name=False)}"
    if isinstance(s, HasAdjective):
        return _fill(s.adjective.shape, (s.subject,) + s.args)
    if isinstance(s, Relation):
        return f"{_arg(s.lhs)} {s.op} {_arg(s.rhs)}"
    if isinstance(s, Not):
        return f"not {_paren(s.arg)}"
    if isinstance(s, And):
        return f"({print_statement(s.left)} and {print_statement(s.right)})"
    if isinstance(s, Or):
        return f"({print_statement(s.left)} or {print_statement(s.right)})"
    if isinstance(s, Implies):
        return f"(if {print_statement(s.left)} then {print_statement(s.right)})"
    if isinstance(s, Iff):
        return f"({print_statement(s.left)} iff {print_statement(s.right)})"
    raise TypeError(f"not a statement: {s!r}")


def _paren(s: Statement) -> str:
    text = print_statement(s)
    return text if text.startswith("(") else f"({text})"


def _slot_names(shape: tuple[str, ...], first: int = 1) -> list[str]:
    names, k = [], first
    for item in shape:
        if item == SLOT:
            names.append(f"x{k}")
            k += 1
        else:
            names.append(item)
    return names


def print_pattern_decl(decl: PatternDecl) -> str:
    p: Pattern = decl.pattern
    if p.kind == NOTION:
        text = "a " + " ".join(_slot_names(p.shape))
        if p.plural is not None:
            text += " / " + " ".join(_slot_names(p.plural))
        return f"{text} is a notion."
    if p.adjective:
        return " ".join(_slot_names(p.shape[2:])) + " is an adjective."
    shape = _slot_names(p.shape)
    if p.kind == "function":
        kind = "constant" if p.slots == 0 else "function"
    elif p.infix:
        kind = "relation"
    else:
        kind = "predicate"
    mods = [m for m, on in (("transitive", decl.transitive),
                            ("well-founded", decl.well_founded)) if on]
    return f"{' '.join(shape)} is a {' '.join(mods + [kind])}."


def _print_steps(steps, indent: str) -> list[str]:
    lines = []
    for st in steps:
        if isinstance(st, CaseBlock):
            lines.append(f"{indent}Case {print_statement(st.hypothesis)}.")
            lines.extend(_print_steps(st.steps, indent + "  "))
            lines.append(f"{indent}end.")
        else:
            lines.append(f"{indent}{print_statement(st.statement)}.")
            if st.proof is not None:
                lines.extend(_print_proof(st.proof, indent))
    return lines


def _print_proof(proof: ProofBlock, indent: str) -> list[str]:
    head = "Proof by induction." if proof.induction else "Proof."
    return [indent + head] + _print_steps(proof.steps, indent + "  ") + [indent + "end."]


def print_document(doc: Document) -> str:
    lines = []
    for b in doc.blocks:
        if isinstance(b, Signature):
            lines.append("Signature.")
            for item in b.items:
                if isinstance(item, LetDecl):
                    lines.append(f"Let {', '.join(item.variables)} denote "
                                 f"{print_phrase(item.phrase, with_name=False)}.")
                else:
                    lines.append(print_pattern_decl(item))
        elif isinstance(b, Definition):
            head = " ".join(_fill_names(b.pattern, b.params))
            lines.append(f"Definition. {head} iff {print_statement(b.body)}.")
        elif isinstance(b, Axiom):
            lines.append(f"Axiom. {print_statement(b.statement)}.")
        elif isinstance(b, Claim):
            lines.append(f"{b.kind.capitalize()}. {print_statement(b.statement)}.")
            if b.proof is not None:
                lines.extend(_print_proof(b.proof, ""))
        lines.append("")
    return "\n".join(lines)


def _fill_names(p: Pattern, params: tuple[str, ...]) -> list[str]:
    it = iter(params)
    if p.kind == NOTION:
        words = [next(it), "is", "a"]
        shape = p.shape
    else:
        words, shape = [], p.shape
    for item in shape:
        words.append(next(it) if item == SLOT else item)
    return words
