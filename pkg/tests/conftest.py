from __future__ import annotations

import random

import pytest

from addbasis import EPS, random_basis

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.line(line)


@pytest.fixture(scope="session")
def a2() -> EPS:
    return EPS(6, frozenset({0}), 0, (2, 3))


@pytest.fixture(scope="session")
def x2() -> EPS:
    return EPS(6, frozenset({0}), 0, tuple(range(1, 6)))


@pytest.fixture(scope="session")
def two_one() -> EPS:
    return EPS(2, frozenset({0}), 0, (1,))


@pytest.fixture(scope="session")
def random_bases() -> list[EPS]:
    rng = random.Random(20260815)
    return [random_basis(rng, max_order=20) for _ in range(120)]
