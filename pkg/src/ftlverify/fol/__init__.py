"""First-order core: formulas, translation, clausal preprocessing, unification."""

from .bounds import check_bounds
from .brand import brand_transform
from .logic import (
    FALSE, TRUE, And, Atom, Bottom, Clause, Eq, Exists, Fn, Forall, Formula, Iff, Implies,
    Literal, NameSupply, Not, Or, Term, Top, Var, clause_formula, conj, disj, free_vars,
    make_clause, normalize_vars, substitute,
)
from .normal import clausify, nnf, rectify, skolemize_cnf
from .translate import translate, translate_definition
from .unify import Clash, OccursCheck, UnificationFailure, match, mgu, unify

__all__ = [
    "FALSE", "TRUE", "And", "Atom", "Bottom", "Clash", "Clause", "Eq", "Exists", "Fn",
    "Forall", "Formula", "Iff", "Implies", "Literal", "NameSupply", "Not", "OccursCheck",
    "Or", "Term", "Top", "UnificationFailure", "Var", "brand_transform", "check_bounds",
    "clause_formula", "clausify", "conj", "disj", "free_vars", "make_clause", "match", "mgu",
    "nnf", "normalize_vars", "rectify", "skolemize_cnf", "substitute", "translate",
    "translate_definition", "unify",
]
