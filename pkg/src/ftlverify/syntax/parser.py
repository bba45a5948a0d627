"""Recursive-descent parser for ForTheL-like texts.

Pattern phrases are resolved by longest match; ties go to the pattern
registered first. Failures backtrack, and the furthest failure position is
what gets reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError, PatternError, SourcePosition, UnknownPattern
from .ast import (
    And, Axiom, CaseBlock, Claim, Definition, Document, FnApp, HasAdjective, Iff,
    Implies, IsNotion, LetDecl, Not, NotionPhrase, Or, PatternDecl, PredicateApp,
    ProofBlock, QuantifiedNotion, Relation, Signature, Statement, Step, Term, Var,
)
from .tokens import Kind, Token
from .vocab import (
    FUNCTION, NOTION, PREDICATE, QUANTIFIERS, SLOT, Pattern, Vocabulary, make_pattern,
)

CLAIM_KEYWORDS = {"Theorem": "theorem", "Lemma": "lemma", "Proposition": "proposition"}
TOP_KEYWORDS = {"Signature", "Definition", "Axiom", *CLAIM_KEYWORDS}
DECL_KINDS = {"notion", "predicate", "relation", "function", "constant", "adjective"}
MODIFIERS = {"transitive", "well-founded"}

NP = "noun phrase"


class _NoParse(Exception):
    pass


@dataclass
class _Far:
    index: int = -1
    expected: set | None = None


class _SentenceParser:
    """Parses one statement from ``tokens[start:end]``."""

    def __init__(self, tokens: list[Token], start: int, end: int, vocab: Vocabulary,
                 far: _Far | None = None):
        self.toks = tokens
        self.i = start
        self.end = end
        self.vocab = vocab
        self.far = far if far is not None else _Far()
        used = {t.text for t in tokens[start:end] if t.kind is Kind.VARIABLE}
        used |= {name for name, _ in vocab.typing}
        self._used = used
        self._fresh = 0
        self._notions = vocab.of_kind(NOTION)
        self._predicates = vocab.of_kind(PREDICATE)
        self._functions = vocab.of_kind(FUNCTION)

    # -- token helpers ------------------------------------------------------

    def peek(self, k: int = 0) -> Token | None:
        j = self.i + k
        return self.toks[j] if j < self.end else None

    def fail(self, *expected: str):
        if self.i > self.far.index:
            self.far.index, self.far.expected = self.i, set(expected)
        elif self.i == self.far.index:
            self.far.expected.update(expected)
        raise _NoParse

    def at_word(self, *words: str) -> bool:
        t = self.peek()
        return t is not None and t.kind is Kind.WORD and t.lower in words

    def word(self, *words: str) -> str:
        if not self.at_word(*words):
            self.fail(*(f"'{w}'" for w in words))
        self.i += 1
        return self.toks[self.i - 1].lower

    def at_symbol(self, text: str) -> bool:
        t = self.peek()
        return t is not None and t.kind is Kind.SYMBOL and t.text == text

    def symbol(self, text: str) -> None:
        if not self.at_symbol(text):
            self.fail(f"'{text}'")
        self.i += 1

    def attempt(self, fn, *args):
        """Run ``fn``; on failure restore the position and return None."""
        save = self.i
        try:
            return fn(*args)
        except _NoParse:
            self.i = save
            return None

    def fresh_var(self) -> str:
        while True:
            self._fresh += 1
            name = f"v{self._fresh}"
            if name not in self._used:
                self._used.add(name)
                return name

    # -- statements -----------------------------------------------------------

    def statement(self) -> Statement:
        left = self.implication()
        if self.at_word("iff"):
            self.i += 1
            return Iff(left, self.implication())
        return left

    def implication(self) -> Statement:
        if self.at_word("if"):
            self.i += 1
            cond = self.statement()
            self.word("then")
            return Implies(cond, self.statement())
        left = self.disjunction()
        if self.at_word("implies"):
            self.i += 1
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Statement:
        left = self.conjunction()
        while self.at_word("or"):
            self.i += 1
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Statement:
        left = self.unary()
        while self.at_word("and", "but"):
            self.i += 1
            left = And(left, self.unary())
        return left

    def unary(self) -> Statement:
        if self.at_word("not"):
            self.i += 1
            return Not(self.unary())
        return self.atomic()

    def atomic(self) -> Statement:
        tok = self.peek()
        if tok is None:
            self.fail("statement")
        if self.at_symbol("("):
            result = self.attempt(self._parenthesized)
            if result is not None:
                return result
        if self.at_word("for"):
            return self._for_quantifier()
        if self.at_word("there"):
            return self._there_is()
        if tok.kind is Kind.WORD and tok.lower in QUANTIFIERS:
            result = self.attempt(self._quantified_subject)
            if result is not None:
                return result
        subject = self.term()
        stmt, wrappers = self.tail(subject)
        return _wrap(stmt, wrappers)

    def _parenthesized(self) -> Statement:
        self.symbol("(")
        s = self.statement()
        self.symbol(")")
        return s

    def _for_quantifier(self) -> Statement:
        self.word("for")
        q = QUANTIFIERS[self.word(*QUANTIFIERS)]
        phrase = self._named(self.notion_phrase(allow_name=True))
        if self.peek() is not None and self.peek().kind is Kind.COMMA:
            self.i += 1
        return QuantifiedNotion(q, phrase, self.statement())

    def _there_is(self) -> Statement:
        self.word("there")
        self.word("is", "are", "exists", "exist")
        q = "some"
        if self.at_word("no"):
            self.i += 1
            q = "no"
        elif self.at_word("a", "an", "some"):
            self.i += 1
        phrase = self._named(self.notion_phrase(allow_name=True))
        scope = None
        t = self.peek()
        if self.at_word("such"):
            self.i += 1
            self.word("that")
            return QuantifiedNotion(q, phrase, self.statement())
        if t is not None and not (t.kind is Kind.WORD and t.lower in
                                  ("and", "but", "or", "iff", "implies", "then")) \
                and not self.at_symbol(")"):
            stmt, wrappers = self.tail(Var(phrase.var))
            scope = _wrap(stmt, wrappers)
        return QuantifiedNotion(q, phrase, scope)

    def _quantified_subject(self) -> Statement:
        q = QUANTIFIERS[self.word(*QUANTIFIERS)]
        phrase = self._named(self.notion_phrase(allow_name=True))
        stmt, wrappers = self.tail(Var(phrase.var))
        return QuantifiedNotion(q, phrase, _wrap(stmt, wrappers))

    def _named(self, phrase: NotionPhrase) -> NotionPhrase:
        if phrase.var is not None:
            return phrase
        return NotionPhrase(phrase.notion, phrase.args, phrase.adjectives, self.fresh_var())

    # -- predicate tails ----------------------------------------------------

    def tail(self, subject: Term) -> tuple[Statement, list]:
        """Parse what follows a subject; the longest alternative wins."""
        start = self.i
        best = None
        candidates = [self._is_notion_tail, self._equality_tail]
        candidates += [lambda s, p=p: self._pattern_tail(s, p) for p in self._predicates]
        for cand in candidates:
            self.i = start
            try:
                result = cand(subject)
            except _NoParse:
                continue
            if best is None or self.i > best[0]:
                best = (self.i, result)
        if best is None:
            self.i = start
            self.fail("predicate")
        self.i = best[0]
        return best[1]

    def _is_notion_tail(self, subject: Term):
        self.word("is")
        negated = False
        if self.at_word("not"):
            self.i += 1
            negated = True
        self.word("a", "an")
        stmt: Statement = IsNotion(subject, self.notion_phrase(allow_name=False))
        return (Not(stmt) if negated else stmt), []

    def _equality_tail(self, subject: Term):
        t = self.peek()
        if t is None or t.kind is not Kind.SYMBOL or t.text not in ("=", "!="):
            self.fail("'='", "'!='")
        self.i += 1
        return Relation(t.text, subject, self.term()), []

    def _pattern_tail(self, subject: Term, p: Pattern):
        args: list[Term] = [subject]
        wrappers: list = []
        negated = False
        for k, item in enumerate(p.shape[1:]):
            if item == SLOT:
                term, wrap = self.argument()
                args.append(term)
                if wrap is not None:
                    wrappers.append(wrap)
            else:
                self.literal(item)
                if item == "is" and self.at_word("not") and not negated:
                    self.i += 1
                    negated = True
        if p.adjective:
            stmt: Statement = HasAdjective(args[0], p, tuple(args[1:]))
        elif p.infix:
            stmt = Relation(p.shape[1], args[0], args[1], p)
        else:
            stmt = PredicateApp(p, tuple(args))
        return (Not(stmt) if negated else stmt), wrappers

    def literal(self, item: str) -> None:
        t = self.peek()
        if t is None:
            self.fail(f"'{item}'")
        if t.kind is Kind.SYMBOL:
            ok = t.text == item
        else:
            ok = t.kind is Kind.WORD and t.lower == item
        if not ok:
            self.fail(f"'{item}'")
        self.i += 1

    def argument(self) -> tuple[Term, tuple | None]:
        t = self.peek()
        if t is not None and t.kind is Kind.WORD and t.lower in QUANTIFIERS:
            save = self.i
            try:
                q = QUANTIFIERS[self.word(*QUANTIFIERS)]
                phrase = self._named(self.notion_phrase(allow_name=True))
                return Var(phrase.var), (q, phrase)
            except _NoParse:
                self.i = save
        return self.term(), None

    # -- noun phrases -------------------------------------------------------

    def notion_phrase(self, allow_name: bool) -> NotionPhrase:
        adjectives: list[Pattern] = []
        while True:
            adj = self._prenominal_adjective()
            if adj is None:
                break
            adjectives.append(adj)
        start = self.i
        best = None
        for p in self._notions:
            for form in p.forms:
                self.i = start
                try:
                    args, name = self._match_notion(form, allow_name)
                except _NoParse:
                    continue
                if best is None or self.i > best[0]:
                    best = (self.i, p, args, name)
        if best is None:
            self.i = start
            self.fail(NP)
        self.i = best[0]
        return NotionPhrase(best[1], tuple(best[2]), tuple(adjectives), best[3])

    def _prenominal_adjective(self) -> Pattern | None:
        for p in self._predicates:
            words = p.adjective_words
            if not words:
                continue
            if all((t := self.peek(k)) is not None and t.kind is Kind.WORD and t.lower == w
                   for k, w in enumerate(words)):
                self.i += len(words)
                return p
        return None

    def _match_notion(self, form: tuple[str, ...], allow_name: bool):
        args: list[Term] = []
        name = None
        for k, item in enumerate(form):
            if item == SLOT:
                args.append(self.term())
                continue
            self.literal(item)
            nxt = form[k + 1] if k + 1 < len(form) else None
            if allow_name and name is None and nxt is not None and nxt != SLOT:
                t = self.peek()
                if t is not None and t.kind is Kind.VARIABLE:
                    name = t.text
                    self.i += 1
        if allow_name and name is None:
            t = self.peek()
            if t is not None and t.kind is Kind.VARIABLE:
                name = t.text
                self.i += 1
        return args, name

    # -- terms --------------------------------------------------------------

    def term(self) -> Term:
        left = self.primary()
        while True:
            t = self.peek()
            if t is None or t.kind is not Kind.SYMBOL:
                return left
            op = next((p for p in self._functions if p.infix and p.shape[1] == t.text), None)
            if op is None:
                return left
            self.i += 1
            left = FnApp(op, (left, self.primary()))

    def primary(self) -> Term:
        t = self.peek()
        if t is None:
            self.fail("term")
        if t.kind is Kind.VARIABLE:
            self.i += 1
            return Var(t.text)
        if self.at_symbol("("):
            self.i += 1
            inner = self.term()
            self.symbol(")")
            return inner
        start = self.i
        best = None
        for p in self._functions:
            if p.shape[0] == SLOT:
                continue
            self.i = start
            try:
                args = []
                for item in p.shape:
                    if item == SLOT:
                        args.append(self.primary())
                    else:
                        self.literal(item)
            except _NoParse:
                continue
            if best is None or self.i > best[0]:
                best = (self.i, FnApp(p, tuple(args)))
        self.i = start
        if best is None:
            self.fail("term")
        self.i = best[0]
        return best[1]


def _wrap(stmt: Statement, wrappers: list) -> Statement:
    for q, phrase in reversed(wrappers):
        stmt = QuantifiedNotion(q, phrase, stmt)
    return stmt


# -- error reporting ------------------------------------------------------------

def _error_at(tokens: list[Token], far: _Far, fallback: int) -> ParseError:
    index = far.index if far.index >= 0 else fallback
    expected = frozenset(far.expected or ())
    if index >= len(tokens):
        pos = tokens[-1].pos if tokens else SourcePosition(1, 1, 0)
        return ParseError(f"unexpected end of input, expected {_fmt(expected)}", pos, expected)
    tok = tokens[index]
    if NP in expected and tok.kind is Kind.WORD:
        words = []
        for t in tokens[index:]:
            if t.kind is not Kind.WORD:
                break
            words.append(t.text)
        return UnknownPattern(" ".join(words), tok.pos, expected)
    return ParseError(f"unexpected '{tok.text}', expected {_fmt(expected)}", tok.pos, expected)


def _fmt(expected: frozenset[str]) -> str:
    return " or ".join(sorted(expected)) if expected else "something else"


def _sentence(tokens: list[Token], start: int, end: int, vocab: Vocabulary) -> Statement:
    far = _Far()
    p = _SentenceParser(tokens, start, end, vocab, far)
    try:
        stmt = p.statement()
        if p.i != end:
            p.fail("'.'")
    except _NoParse:
        raise _error_at(tokens, far, start) from None
    return stmt


def parse_statement(tokens: list[Token], vocab: Vocabulary) -> Statement:
    """Parse a single statement; a trailing period is optional."""
    end = len(tokens)
    if tokens and tokens[-1].kind is Kind.PERIOD:
        end -= 1
    if end == 0:
        raise ParseError("empty statement", tokens[0].pos if tokens else None,
                         frozenset({"statement"}))
    return _sentence(tokens, 0, end, vocab)


# -- documents ----------------------------------------------------------------

class _DocumentParser:
    def __init__(self, tokens: list[Token], vocab: Vocabulary):
        self.toks = tokens
        self.i = 0
        self.vocab = vocab

    def error(self, expected: str, index: int | None = None) -> ParseError:
        index = self.i if index is None else index
        far = _Far(index, {expected})
        return _error_at(self.toks, far, index)

    def peek(self) -> Token | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def keyword(self, *words: str) -> str:
        t = self.peek()
        if t is None or t.kind is not Kind.KEYWORD or t.text not in words:
            raise self.error(" or ".join(f"'{w}'" for w in words))
        self.i += 1
        return t.text

    def period(self) -> None:
        t = self.peek()
        if t is None or t.kind is not Kind.PERIOD:
            raise self.error("'.'")
        self.i += 1

    def sentence_end(self) -> int:
        """Index of the period closing the sentence starting at self.i."""
        j = self.i
        while j < len(self.toks):
            t = self.toks[j]
            if t.kind is Kind.PERIOD:
                return j
            if t.kind is Kind.KEYWORD:
                break
            j += 1
        raise self.error("'.'", j)

    def sentence(self) -> tuple[Statement, SourcePosition]:
        if self.i >= len(self.toks):
            raise self.error("statement")
        pos = self.toks[self.i].pos
        end = self.sentence_end()
        if end == self.i:
            raise self.error("statement")
        stmt = _sentence(self.toks, self.i, end, self.vocab)
        self.i = end + 1
        return stmt, pos

    def document(self) -> Document:
        blocks = []
        while self.i < len(self.toks):
            t = self.peek()
            if t.kind is not Kind.KEYWORD or t.text not in TOP_KEYWORDS:
                raise self.error("block keyword")
            self.i += 1
            self.period()
            if t.text == "Signature":
                blocks.append(self.signature(t.pos))
            elif t.text == "Definition":
                blocks.append(self.definition(t.pos))
            elif t.text == "Axiom":
                stmt, _ = self.sentence()
                blocks.append(Axiom(stmt, t.pos))
            else:
                stmt, _ = self.sentence()
                proof = self.proof() if self._at_proof() else None
                blocks.append(Claim(CLAIM_KEYWORDS[t.text], stmt, proof, t.pos))
        return Document(tuple(blocks), self.vocab)

    # -- proofs -------------------------------------------------------------

    def _at_proof(self) -> bool:
        t = self.peek()
        return t is not None and t.kind is Kind.KEYWORD and t.text == "Proof"

    def proof(self) -> ProofBlock:
        pos = self.peek().pos
        self.keyword("Proof")
        induction = False
        t = self.peek()
        if t is not None and t.kind is Kind.WORD and t.lower == "by":
            self.i += 1
            t = self.peek()
            if t is None or t.lower != "induction":
                raise self.error("'induction'")
            self.i += 1
            induction = True
        self.period()
        return ProofBlock(self.steps(), induction, pos)

    def steps(self) -> tuple:
        steps = []
        while True:
            t = self.peek()
            if t is None:
                raise self.error("'end'")
            if t.kind is Kind.KEYWORD and t.text == "end":
                self.i += 1
                self.period()
                return tuple(steps)
            if t.kind is Kind.KEYWORD and t.text == "Case":
                self.i += 1
                hyp, _ = self.sentence()
                steps.append(CaseBlock(hyp, self.steps(), t.pos))
                continue
            if t.kind is Kind.KEYWORD:
                raise self.error("statement or 'end'")
            stmt, pos = self.sentence()
            sub = self.proof() if self._at_proof() else None
            steps.append(Step(stmt, pos, sub))

    # -- signatures ---------------------------------------------------------

    def signature(self, pos: SourcePosition) -> Signature:
        items = []
        while True:
            t = self.peek()
            if t is None or t.kind is Kind.KEYWORD:
                break
            items.append(self.declaration())
        if not items:
            raise self.error("declaration")
        return Signature(tuple(items), pos)

    def declaration(self):
        start = self.i
        end = self.sentence_end()
        toks = self.toks[start:end]
        if toks and toks[0].kind is Kind.WORD and toks[0].lower == "let":
            decl = self._let(start, end)
        else:
            decl = self._pattern_decl(start, end)
        self.i = end + 1
        return decl

    def _let(self, start: int, end: int) -> LetDecl:
        names = []
        j = start + 1
        while True:
            if j >= end or self.toks[j].kind is not Kind.VARIABLE:
                raise self.error("variable", j)
            names.append(self.toks[j].text)
            j += 1
            if j < end and self.toks[j].kind is Kind.COMMA:
                j += 1
                continue
            break
        if j >= end or self.toks[j].lower not in ("denote", "be"):
            raise self.error("'denote'", j)
        j += 1
        if j < end and self.toks[j].kind is Kind.WORD and self.toks[j].lower in ("a", "an"):
            j += 1
        far = _Far()
        p = _SentenceParser(self.toks, j, end, self.vocab, far)
        try:
            phrase = p.notion_phrase(allow_name=False)
            if p.i != end:
                p.fail("'.'")
        except _NoParse:
            raise _error_at(self.toks, far, j) from None
        for n in names:
            self.vocab = self.vocab.declare(n, phrase)
        return LetDecl(tuple(names), phrase)

    def _pattern_decl(self, start: int, end: int) -> PatternDecl:
        toks = self.toks[start:end]
        # locate the trailing "is a|an [modifiers] <kind>"
        k = len(toks) - 1
        if k < 0 or toks[k].lower not in DECL_KINDS:
            raise self.error("declaration kind", start + max(k, 0))
        kind = toks[k].lower
        mods = []
        k -= 1
        while k >= 0 and toks[k].lower in MODIFIERS:
            mods.append(toks[k].lower)
            k -= 1
        if k < 1 or toks[k].lower not in ("a", "an") or toks[k - 1].lower != "is":
            raise self.error("'is a'", start + max(k, 0))
        shape_toks = toks[:k - 1]
        if not shape_toks:
            raise self.error("pattern", start)
        try:
            pattern = self._build_pattern(kind, shape_toks)
            if mods and pattern.kind != PREDICATE:
                raise PatternError(f"'{' '.join(mods)}' applies only to relations")
            self.vocab = self.vocab.register(pattern)
        except PatternError as e:
            e.pos = e.pos or self.toks[start].pos
            raise
        decl = PatternDecl(pattern, "transitive" in mods, "well-founded" in mods)
        if mods:
            self.vocab = self.vocab.mark(pattern.symbol, decl.transitive, decl.well_founded)
        return decl

    def _build_pattern(self, kind: str, toks: list[Token]) -> Pattern:
        def items(ts):
            out = []
            for t in ts:
                if t.kind is Kind.VARIABLE:
                    out.append(SLOT)
                elif t.kind is Kind.WORD:
                    out.append(t.lower)
                elif t.kind is Kind.SYMBOL and t.text not in ("(", ")", "/"):
                    out.append(t.text)
                else:
                    raise PatternError(f"unexpected '{t.text}' in pattern", t.pos)
            return tuple(out)

        if kind == "notion":
            alts, cur = [], []
            for t in toks:
                if t.kind is Kind.SYMBOL and t.text == "/":
                    alts.append(cur)
                    cur = []
                else:
                    cur.append(t)
            alts.append(cur)
            if len(alts) > 2 or not all(alts):
                raise PatternError("a notion has one singular and at most one plural form",
                                   toks[0].pos)
            singular = alts[0]
            if singular[0].kind is Kind.WORD and singular[0].lower in ("a", "an"):
                singular = singular[1:]
            plural = items(alts[1]) if len(alts) == 2 else None
            shape = items(singular)
            if not shape or shape[0] == SLOT:
                raise PatternError("a notion name must start with a word", toks[0].pos)
            return make_pattern(NOTION, shape, plural)
        if kind == "adjective":
            # "x is prime is an adjective" and "prime is an adjective" both work
            if len(toks) > 2 and toks[0].kind is Kind.VARIABLE and toks[1].lower == "is":
                toks = toks[2:]
            return make_pattern(PREDICATE, (SLOT, "is") + items(toks), adjective=True)
        if kind in ("predicate", "relation"):
            if toks[0].kind is not Kind.VARIABLE:
                raise PatternError("a predicate must start with its subject variable", toks[0].pos)
            shape = items(toks)
            if kind == "relation" and not (len(shape) == 3 and shape[1] != SLOT
                                           and shape[0] == shape[2] == SLOT):
                raise PatternError("a relation is declared as 'x <op> y'", toks[0].pos)
            return make_pattern(PREDICATE, shape)
        if kind == "constant":
            if len(toks) != 1:
                raise PatternError("a constant is a single word or numeral", toks[0].pos)
            return make_pattern(FUNCTION, items(toks))
        shape = items(toks)
        if shape[0] == SLOT and not (len(shape) == 3 and shape[2] == SLOT
                                     and not shape[1][0].isalpha()):
            raise PatternError("functions are 'x <op> y' or start with a word", toks[0].pos)
        return make_pattern(FUNCTION, shape)

    # -- definitions --------------------------------------------------------

    def definition(self, pos: SourcePosition) -> Definition:
        start = self.i
        end = self.sentence_end()
        iff = next((j for j in range(start, end)
                    if self.toks[j].kind is Kind.WORD and self.toks[j].lower == "iff"), None)
        if iff is None or iff == start:
            raise self.error("'iff'", end if iff is None else iff)
        pattern, params = self._existing_head(start, iff)
        if pattern is None:
            pattern, params = self._new_head(start, iff)
        body = _sentence(self.toks, iff + 1, end, self.vocab)
        self.i = end + 1
        return Definition(pattern, tuple(params), body, pos)

    def _existing_head(self, start: int, stop: int):
        p = _SentenceParser(self.toks, start, stop, self.vocab)
        try:
            subject = p.term()
            stmt, wrappers = p.tail(subject)
        except _NoParse:
            return None, None
        if p.i != stop or wrappers:
            return None, None
        if isinstance(stmt, IsNotion) and not stmt.phrase.adjectives:
            pattern, args = stmt.phrase.notion, (stmt.subject,) + stmt.phrase.args
        elif isinstance(stmt, HasAdjective):
            pattern, args = stmt.adjective, (stmt.subject,) + stmt.args
        elif isinstance(stmt, PredicateApp):
            pattern, args = stmt.pattern, stmt.args
        elif isinstance(stmt, Relation) and stmt.pattern is not None:
            pattern, args = stmt.pattern, (stmt.lhs, stmt.rhs)
        else:
            return None, None
        names = [a.name for a in args if isinstance(a, Var)]
        if len(names) != len(args) or len(set(names)) != len(names):
            raise ParseError("definition head arguments must be distinct variables",
                             self.toks[start].pos, frozenset({"variable"}))
        return pattern, names

    def _new_head(self, start: int, stop: int):
        toks = self.toks[start:stop]
        if toks[0].kind is not Kind.VARIABLE:
            raise self.error("variable", start)
        params = [toks[0].text]
        rest = toks[1:]
        try:
            if len(rest) >= 2 and rest[0].lower == "is" and rest[1].lower in ("a", "an"):
                body = rest[2:]
                kind, adjective, prefix = NOTION, False, ()
            elif rest and rest[0].lower == "is":
                body = rest[1:]
                kind, adjective, prefix = PREDICATE, True, (SLOT, "is")
            else:
                body = rest
                kind, adjective, prefix = PREDICATE, False, (SLOT,)
            if not body:
                raise PatternError("definition head has no new words", toks[0].pos)
            shape = list(prefix)
            for t in body:
                if t.kind is Kind.VARIABLE:
                    shape.append(SLOT)
                    params.append(t.text)
                elif t.kind is Kind.WORD:
                    shape.append(t.lower)
                elif t.kind is Kind.SYMBOL and t.text not in ("(", ")"):
                    shape.append(t.text)
                else:
                    raise PatternError(f"unexpected '{t.text}' in definition head", t.pos)
            if len(set(params)) != len(params):
                raise PatternError("definition head arguments must be distinct", toks[0].pos)
            pattern = make_pattern(kind, tuple(shape), adjective=adjective)
            self.vocab = self.vocab.register(pattern)
        except PatternError as e:
            e.pos = e.pos or toks[0].pos
            raise
        return pattern, params


def parse_document(tokens: list[Token], vocab: Vocabulary | None = None) -> Document:
    """Parse a whole text; the vocabulary grows as declarations are read."""
    return _DocumentParser(tokens, vocab or Vocabulary()).document()
