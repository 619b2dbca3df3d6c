import pytest

from erlsem.difftest import GenConfig, generate
from erlsem.frontend import parse

CORPUS_SEED = 2024
CORPUS_SIZE = 1000


FIRST_EXAMPLE = """let X = fun(Y, Z) -> Y in
  apply X('a', 'b')"""

SECOND_EXAMPLE = """let X = 4 in
  let Y = 5 in
    apply (fun(X, Y) -> X + Y) (X, Y)"""

DIVERGING = "letrec f/0 = fun() -> apply f/0() in apply f/0()"


@pytest.fixture(scope="session")
def corpus():
    return generate(GenConfig(seed=CORPUS_SEED, max_size=30), CORPUS_SIZE)


@pytest.fixture(scope="session")
def first_example():
    return parse(FIRST_EXAMPLE)


@pytest.fixture(scope="session")
def second_example():
    return parse(SECOND_EXAMPLE)


@pytest.fixture(scope="session")
def diverging():
    return parse(DIVERGING)


def pytest_terminal_summary(terminalreporter):
    from acceptance_report import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])
