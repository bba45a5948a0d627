"""Sentence corpus shared by the parser, translation and acceptance tests.

Every sentence is read against PRELUDE. INTENDED lists hand-assigned truth
values of sentences in the finite structure WORLD; the values were worked
out by hand from the intended reading of each sentence.
"""

from __future__ import annotations

from pathlib import Path

from ftlverify.syntax import parse_text
from ftlverify.verifier.build import TaskBuilder
from oracles.finite_models import Interpretation

TEXTS = Path(__file__).resolve().parent.parent / "texts"

PRELUDE = """\
Signature.
a set / sets is a notion.
a class / classes is a notion.
a group / groups is a notion.
a subgroup of x / subgroups of x is a notion.
an element of x / elements of x is a notion.
a remedy / remedies is a notion.
a desease / deseases is a notion.
a number / numbers is a notion.
x against y is a predicate.
x divides y is a predicate.
x commutes with y is a predicate.
x is prime is an adjective.
x is normal is an adjective.
x is even is an adjective.
x < y is a relation.
the centralizer of x is a function.
the normalizer of x is a function.
the successor of x is a function.
zero is a constant.
Let G, H, P denote groups.
Let m, n denote numbers.
"""

REMEDY = ("there is no remedy against all deseases but there is a desease "
          "against all remedies.")
CENTRALIZER = ("for every subgroup P of G, the centralizer of P is a normal subgroup "
               "of the normalizer of P.")
SUBGROUP = "H is a subgroup of G."

SENTENCES = [
    "Every group is a set.",
    "each group is a set.",
    "no set is a class.",
    REMEDY,
    SUBGROUP,
    CENTRALIZER,
    "some prime number divides n.",
    "m divides n and n divides m.",
    "if m divides n then m < n or m = n.",
    "every element x of G commutes with x.",
    "n is not even.",
    "n is prime iff n is not even.",
    "every prime number is a number.",
    "there exists a prime number n such that n divides zero.",
    "the successor of zero is even.",
    "for all numbers m, m < the successor of m.",
    "not (m < n and n < m).",
    "m < n implies not n < m.",
    "a number divides zero.",
    "zero != the successor of zero.",
    "every even prime number divides zero.",
    "if every number divides zero then zero is even.",
    "there is a set x such that every element of x is a set.",
    "m = n or m != n.",
    "the centralizer of H is a subgroup of H.",
    "every subgroup of G is a group.",
    "some element of G is not a set or every group is a class.",
    "there is a number n such that n divides n and n is even.",
]

# domain {0, 1, 2}
WORLD = Interpretation(
    domain=[0, 1, 2],
    functions={
        "zero": {(): 0},
        "successorOf": {(0,): 1, (1,): 2, (2,): 2},
        "centralizerOf": {(0,): 1, (1,): 1, (2,): 2},
        "normalizerOf": {(0,): 0, (1,): 1, (2,): 2},
    },
    predicates={
        "aSet": {(0,), (1,), (2,)},
        "aClass": {(0,), (1,), (2,)},
        "aGroup": {(0,), (1,)},
        "aSubgroupOf": {(0, 0), (1, 0), (1, 1)},
        "aElementOf": {(0, 0), (1, 0), (2, 1)},
        "aRemedy": {(0,)},
        "aDesease": {(1,), (2,)},
        "aNumber": {(0,), (1,), (2,)},
        "against": {(0, 1), (1, 0), (2, 0)},
        "divides": {(0, 0), (1, 0), (1, 1), (1, 2), (2, 0), (2, 2)},
        "commutesWith": {(0, 0), (1, 1), (2, 2)},
        "isPrime": {(2,)},
        "isNormal": {(1,)},
        "isEven": {(0,), (2,)},
        "<": {(0, 1), (0, 2), (1, 2)},
    },
)

INTENDED = {
    "Every group is a set.": True,
    "no set is a class.": False,
    REMEDY: True,
    SUBGROUP: False,                 # H=0, G=1 is not a subgroup pair
    CENTRALIZER: True,
    "some prime number divides n.": False,      # 2 does not divide 1
    "if m divides n then m < n or m = n.": False,   # 2 divides 0
    "every element x of G commutes with x.": True,
    "n is not even.": False,
    "the successor of zero is even.": False,
    "for all numbers m, m < the successor of m.": False,   # successor of 2 is 2
    "not (m < n and n < m).": True,
    "a number divides zero.": True,
    "zero != the successor of zero.": True,
    "every even prime number divides zero.": True,
    "if every number divides zero then zero is even.": True,
    "there is a set x such that every element of x is a set.": True,
    "m = n or m != n.": True,
    "the centralizer of H is a subgroup of H.": True,
    "every subgroup of G is a group.": True,
    "there exists a prime number n such that n divides zero.": True,
    "n is prime iff n is not even.": False,     # fails at 1
    "m < n implies not n < m.": True,
    "every prime number is a number.": True,
}


def sentence_document(sentence: str) -> str:
    return PRELUDE + "\nAxiom. " + sentence + "\n"


def corpus_texts() -> list[str]:
    """Every corpus item as a full document: one per sentence plus the bundled texts."""
    docs = [sentence_document(s) for s in SENTENCES]
    docs += [p.read_text(encoding="utf-8") for p in sorted(TEXTS.glob("*.ftl"))]
    return docs


def closed_image(sentence: str):
    """First-order image of a corpus sentence, closed over its Let-typed variables."""
    builder = TaskBuilder(parse_text(sentence_document(sentence)))
    builder.build()
    return builder.premises[-1].formula
