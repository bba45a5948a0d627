from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from corpus import CENTRALIZER, PRELUDE, REMEDY, SENTENCES, corpus_texts, sentence_document
from ftlverify.errors import (
    AmbiguousPattern, DuplicatePattern, FtlError, IllegalCharacter, ParseError, UnknownPattern,
)
from ftlverify.syntax import (
    Kind, Vocabulary, make_pattern, parse_statement, parse_text, print_document,
    print_statement, register_pattern, tokenize,
)
from ftlverify.syntax import ast


class TestTokenize:
    def test_kinds(self):
        toks = tokenize("Axiom. x divides y, x < y.")
        assert [t.kind for t in toks] == [
            Kind.KEYWORD, Kind.PERIOD, Kind.VARIABLE, Kind.WORD, Kind.VARIABLE, Kind.COMMA,
            Kind.VARIABLE, Kind.SYMBOL, Kind.VARIABLE, Kind.PERIOD]

    def test_positions_are_one_based(self):
        toks = tokenize("Axiom.\n  foo.")
        assert (toks[2].pos.line, toks[2].pos.col) == (2, 3)

    def test_comment_lines_skipped(self):
        assert tokenize("# a comment\nAxiom.")[0].text == "Axiom"

    def test_illegal_character(self):
        with pytest.raises(IllegalCharacter) as exc:
            tokenize("Axiom. x € y.")
        assert exc.value.pos.col == 10


class TestVocabulary:
    def test_notion_naming(self):
        p = make_pattern("notion", ("subgroup", "of", "?"))
        assert p.symbol == "aSubgroupOf" and p.arity == 2

    def test_predicate_naming(self):
        assert make_pattern("predicate", ("?", "is", "prime")).symbol == "isPrime"
        assert make_pattern("predicate", ("?", "divides", "?")).symbol == "divides"
        assert make_pattern("predicate", ("?", "<", "?")).symbol == "<"

    def test_function_naming(self):
        assert make_pattern("function", ("the", "successor", "of", "?")).symbol == "successorOf"

    def test_register_divides(self):
        v = register_pattern(Vocabulary(), make_pattern("predicate", ("?", "divides", "?")))
        assert v.by_symbol("divides").arity == 2

    def test_duplicate(self):
        p = make_pattern("notion", ("subgroup", "of", "?"))
        v = register_pattern(Vocabulary(), p)
        with pytest.raises(DuplicatePattern):
            register_pattern(v, make_pattern("notion", ("subgroup", "of", "?")))

    def test_symbol_collision_is_ambiguous(self):
        v = register_pattern(Vocabulary(), make_pattern("predicate", ("?", "divides", "?")))
        with pytest.raises(AmbiguousPattern):
            register_pattern(v, make_pattern("function", ("divides",)))

    def test_registration_never_mutates(self):
        v = Vocabulary()
        register_pattern(v, make_pattern("notion", ("set",)))
        assert v.patterns == ()


class TestParseStatement:
    def statement(self, text, vocab):
        return parse_statement(tokenize(text), vocab)

    def test_subgroup(self, prelude_vocab):
        s = self.statement("x is a subgroup of G", prelude_vocab)
        assert isinstance(s, ast.IsNotion)
        assert s.subject == ast.Var("x")
        assert s.phrase.notion.symbol == "aSubgroupOf" and s.phrase.args == (ast.Var("G"),)

    def test_conjunction(self, prelude_vocab):
        s = self.statement("x divides y and y divides z", prelude_vocab)
        assert isinstance(s, ast.And)
        assert s.left == ast.PredicateApp(prelude_vocab.by_symbol("divides"),
                                          (ast.Var("x"), ast.Var("y")))
        assert s.right.args == (ast.Var("y"), ast.Var("z"))

    def test_some_prime_number(self, prelude_vocab):
        s = self.statement("some prime number divides n", prelude_vocab)
        assert isinstance(s, ast.QuantifiedNotion) and s.quantifier == "some"
        assert s.phrase.notion.symbol == "aNumber"
        assert [a.symbol for a in s.phrase.adjectives] == ["isPrime"]
        assert s.scope.args == (ast.Var(s.phrase.var), ast.Var("n"))

    def test_remedy_sentence_shape(self, prelude_vocab):
        s = self.statement(REMEDY, prelude_vocab)
        assert isinstance(s, ast.And)
        left, right = s.left, s.right
        assert isinstance(left, ast.QuantifiedNotion) and left.quantifier == "no"
        assert left.phrase.notion.symbol == "aRemedy"
        assert left.scope.quantifier == "every" and left.scope.phrase.notion.symbol == "aDesease"
        assert right.quantifier == "some" and right.phrase.notion.symbol == "aDesease"
        assert right.scope.phrase.notion.symbol == "aRemedy"

    def test_centralizer(self, prelude_vocab):
        s = self.statement(CENTRALIZER, prelude_vocab)
        assert s.quantifier == "every" and s.phrase.var == "P"

    def test_unknown_noun_phrase(self, prelude_vocab):
        with pytest.raises(UnknownPattern):
            self.statement("every monoid is a set", prelude_vocab)

    def test_empty(self, prelude_vocab):
        with pytest.raises(ParseError):
            parse_statement([], prelude_vocab)


class TestParseDocument:
    def test_axiom_every_group(self):
        doc = parse_text("Signature. a group is a notion. a set is a notion.\n"
                         "Axiom. Every group is a set.")
        axiom = doc.blocks[-1]
        assert isinstance(axiom, ast.Axiom)
        s = axiom.statement
        assert s.quantifier == "every" and s.phrase.notion.symbol == "aGroup"
        assert isinstance(s.scope, ast.IsNotion) and s.scope.phrase.notion.symbol == "aSet"

    def test_malformed_reports_period(self):
        src = "Signature. a group is a notion.\nTheorem. Every ."
        with pytest.raises(ParseError) as exc:
            parse_text(src)
        err = exc.value
        assert src[err.pos.offset] == "."
        assert any("noun phrase" in e or "notion" in e for e in err.expected)
        assert err.report("t.ftl").startswith(f"t.ftl:2:{err.pos.col}: error:")

    def test_proof_blocks(self, divisibility_doc):
        claims = [b for b in divisibility_doc.blocks if isinstance(b, ast.Claim)]
        assert [c.kind for c in claims] == ["lemma", "lemma", "theorem"]
        assert not claims[0].proof.induction and claims[1].proof.induction
        assert all(isinstance(s, ast.CaseBlock) for s in claims[0].proof.steps)

    def test_declarations_flagged(self, divisibility_doc):
        assert divisibility_doc.vocab.transitive == {"<"}
        assert divisibility_doc.vocab.well_founded == ("<",)

    def test_vocabulary_grows_left_to_right(self):
        with pytest.raises(UnknownPattern):
            parse_text("Axiom. every group is a group.\nSignature. a group is a notion.")


class TestCorpus:
    @pytest.mark.parametrize("sentence", SENTENCES)
    def test_sentence_parses(self, sentence):
        parse_text(sentence_document(sentence))

    @pytest.mark.parametrize("text", corpus_texts())
    def test_round_trip(self, text):
        doc = parse_text(text)
        printed = print_document(doc)
        again = parse_text(printed)
        assert again == doc
        assert print_document(again) == printed

    def test_statement_printer(self, prelude_vocab):
        for s in SENTENCES:
            stmt = parse_statement(tokenize(s), prelude_vocab)
            assert parse_statement(tokenize(print_statement(stmt)), prelude_vocab) == stmt

    def test_deterministic(self):
        for text in corpus_texts():
            assert parse_text(text) == parse_text(text)

    def test_prefix_monotone(self, divisibility_source):
        """A prefix of blocks parses the same whether or not the rest follows."""
        full = parse_text(divisibility_source)
        cut = divisibility_source.index("Lemma.")
        prefix = parse_text(divisibility_source[:cut])
        assert full.blocks[:len(prefix.blocks)] == prefix.blocks
        assert set(prefix.vocab.patterns) <= set(full.vocab.patterns)


def _sentence_start(tokens, k):
    """Offset of the first token of the sentence holding token k."""
    j = k
    while j > 0 and tokens[j - 1].kind is not Kind.PERIOD:
        j -= 1
    return tokens[j].pos.offset


class TestErrorPositions:
    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_token_deletion(self, data):
        texts = corpus_texts()
        text = texts[data.draw(st.integers(0, len(texts) - 1))]
        tokens = tokenize(text)
        k = data.draw(st.integers(0, len(tokens) - 1))
        broken = text[:tokens[k].pos.offset] + " " * len(tokens[k].text) + text[tokens[k].end:]
        try:
            parse_text(broken)
        except FtlError as e:
            assert e.pos is not None
            starts = {t.pos.offset for t in tokenize(broken)} | {len(broken)}
            assert e.pos.offset in starts
            assert e.pos.offset >= _sentence_start(tokens, k) or k == 0
        # some deletions leave a valid text; that is fine

    def test_fuzz_fixed_seed(self):
        rng = random.Random(7)
        text = PRELUDE + "\nAxiom. " + REMEDY + "\n"
        for _ in range(40):
            tokens = tokenize(text)
            k = rng.randrange(len(tokens))
            broken = text[:tokens[k].pos.offset] + text[tokens[k].end:]
            try:
                parse_text(broken)
            except FtlError as e:
                assert 0 <= e.pos.offset <= len(broken)
