"""Controlled-language front end: tokens, vocabulary, parser, printer."""

from .ast import Document, NotionPhrase, Statement
from .parser import parse_document, parse_statement
from .printer import print_document, print_statement
from .tokens import Kind, Token, tokenize
from .vocab import Pattern, Vocabulary, make_pattern, register_pattern


def parse_text(source: str, vocab: Vocabulary | None = None) -> Document:
    return parse_document(tokenize(source), vocab)


__all__ = [
    "Document", "Kind", "NotionPhrase", "Pattern", "Statement", "Token", "Vocabulary",
    "make_pattern", "parse_document", "parse_statement", "parse_text", "print_document",
    "print_statement", "register_pattern", "tokenize",
]
