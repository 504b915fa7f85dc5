from __future__ import annotations

import random
import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tropical.arith import BOTTOM, TropNum
from tropical.curve import TropPoly2, corner_locus
from tropical.poly1 import TropPoly1

LINE = "1/2+2x+(-5)y"
CONIC = "3+2x+2y+3xy+x^2+y^2"
DOUBLE_CONIC = "0+x+y^2+(-1)x^2"

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
finite_trop = rationals.map(TropNum)
trop_nums = st.one_of(finite_trop, st.just(BOTTOM))


@st.composite
def poly1s(draw, max_degree=12):
    deg = draw(st.integers(0, max_degree))
    coeffs = {deg: draw(finite_trop)}
    for i in range(deg):
        if draw(st.booleans()):
            coeffs[i] = draw(finite_trop)
    return TropPoly1(coeffs)


def random_poly2(rng: random.Random, d: int, full: bool = True, span: int = 12) -> TropPoly2:
    """Generic-ish degree-d polynomial; corners of the triangle always present."""
    coeffs = {}
    for i in range(d + 1):
        for j in range(d + 1 - i):
            corner = (i, j) in ((0, 0), (d, 0), (0, d))
            if full or corner or rng.random() < 0.6:
                coeffs[(i, j)] = Fraction(rng.randint(-span * 4, span * 4), 4)
    return TropPoly2(coeffs)


def unimodular(d: int) -> TropPoly2:
    """Strictly concave heights: a unimodular triangulation of the d-triangle."""
    return TropPoly2({(i, j): -(i * i + i * j + j * j) for i in range(d + 1) for j in range(d + 1 - i)})


@pytest.fixture
def line_curve():
    from tropical.parse import parse_poly

    return corner_locus(parse_poly(LINE))


@pytest.fixture
def conic_curve():
    from tropical.parse import parse_poly

    return corner_locus(parse_poly(CONIC))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
        terminalreporter.write_line(line)
