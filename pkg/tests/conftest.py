import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from orbitgrowth.core import FiniteMetricSpace, System


ACCEPTANCE = {}


def record(criterion: int, ok: bool, detail: str = ""):
    ACCEPTANCE[criterion] = (bool(ok), detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


def random_space(rng: random.Random, n: int, denom: int = 8) -> FiniteMetricSpace:
    """Shortest-path closure of random rational weights: always a metric."""
    w = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w[i][j] = w[j][i] = Fraction(rng.randint(1, denom), denom)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if w[i][k] + w[k][j] < w[i][j]:
                    w[i][j] = w[i][k] + w[k][j]
    return FiniteMetricSpace.from_fractions(range(n), w)


def random_system(rng: random.Random, n: int, denom: int = 8) -> System:
    space = random_space(rng, n, denom)
    return System(space, [rng.randrange(n) for _ in range(n)], name=f"rand{n}")


def subsets(items):
    items = list(items)
    for r in range(1, len(items) + 1):
        yield from itertools.combinations(items, r)


@pytest.fixture
def rng():
    return random.Random(1234)
