import random

import pytest

from wstrass.curve import new_curve
from wstrass.exact import UniPoly, discriminant
from wstrass.quartic import Form

GRID = [(n, d) for n in range(2, 12) for d in range(n + 1, 13) if not (n == 2 and d < 5)]


def random_separable(d, rng):
    """Monic degree-d polynomial with small integer coefficients and nonzero discriminant."""
    while True:
        f = UniPoly([rng.randint(-5, 5) for _ in range(d)] + [1])
        if discriminant(f) != 0:
            return f


def grid_curves(seed=2024):
    rng = random.Random(seed)
    return [new_curve(n, random_separable(d, rng)) for n, d in GRID]


def xyz():
    return Form.var(0), Form.var(1), Form.var(2)


@pytest.fixture(scope="session")
def curves():
    return grid_curves()


@pytest.fixture(scope="session")
def quartics():
    x, y, z = xyz()
    return {
        "klein": x**3 * y + y**3 * z + z**3 * x,
        "fermat": x**4 + y**4 + z**4,
        "t3": y**4 - x * z * (x - z) * (x - 3 * z),
    }


def pytest_terminal_summary(terminalreporter):
    acceptance = __import__("sys").modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
