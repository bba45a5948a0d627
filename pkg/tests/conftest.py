from __future__ import annotations

import pytest

from corpus import PRELUDE, TEXTS
from ftlverify.syntax import parse_text


@pytest.fixture(scope="session")
def prelude_doc():
    return parse_text(PRELUDE)


@pytest.fixture(scope="session")
def prelude_vocab(prelude_doc):
    return prelude_doc.vocab


@pytest.fixture(scope="session")
def divisibility_source():
    return (TEXTS / "divisibility.ftl").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def divisibility_doc(divisibility_source):
    return parse_text(divisibility_source)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
