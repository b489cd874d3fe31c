import random

import pytest

from wreathlie import fixtures

_ACCEPTANCE_LINES = []


def record_acceptance(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
    if detail:
        line += f" ({detail})"
    print(line)
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(scope="session")
def heisenberg():
    return fixtures.algebra("heisenberg")


@pytest.fixture(scope="session")
def sl2():
    return fixtures.algebra("sl2")


@pytest.fixture(scope="session")
def abelian2():
    return fixtures.algebra("abelian2")


@pytest.fixture(scope="session")
def solvable2():
    return fixtures.algebra("solvable2")
