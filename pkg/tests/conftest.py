from fractions import Fraction
from itertools import product

import pytest
from hypothesis import strategies as st

from dotpairs.geometry import Point


def enumerate_triples(points, alpha, beta):
    """Reference count straight from the definition, on raw Fractions."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    alpha, beta = Fraction(alpha), Fraction(beta)
    return sum(
        1
        for p, q, r in product(pts, repeat=3)
        if p[0] * q[0] + p[1] * q[1] == alpha and p[0] * r[0] + p[1] * r[1] == beta
    )


small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)
points = st.builds(Point, small_rationals, small_rationals)
nonorigin_points = points.filter(lambda p: not p.is_origin())


@pytest.fixture
def three_points():
    return [(1, 0), (0, 1), (1, 1)]


ACCEPTANCE_LINES = []


def record_criterion(number, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
