from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings

from tropical.arith import BOTTOM, TropNum
from tropical.parse import parse_poly
from tropical.poly1 import TropPoly1, TropRoot, canonical1, eval1, expand1, factor1, mul1, roots1

from conftest import poly1s


def _values(roots):
    return [(None if r.value.is_bottom else r.value.value, r.order) for r in roots]


def test_cubic_roots():
    p = parse_poly("x^3+2x^2+3x+(-1)")
    assert _values(roots1(p)) == [(-4, 1), (1, 1), (2, 1)]


def test_double_root():
    # x^2 + 0x + 0 as a function is (x + 0)^2
    assert _values(roots1(parse_poly("x^2+0"))) == [(0, 2)]
    assert _values(roots1(parse_poly("x^2+(-4)x+0"))) == [(0, 2)]


def test_bottom_root():
    p = parse_poly("x^3+x^2")
    assert _values(roots1(p)) == [(None, 2), (0, 1)]


def test_monomial_has_only_bottom_roots():
    assert _values(roots1(parse_poly("5x^2"))) == [(None, 2)]
    assert roots1(parse_poly("5")) == []


def test_canonical_fills_hull():
    p = parse_poly("x^2+(-4)x+0")
    assert canonical1(p) == TropPoly1({0: 0, 1: 0, 2: 0})


def _corner_scan(p: TropPoly1):
    """Oracle: locate corners by scanning rational points between candidate roots."""
    cands = set()
    items = list(p.coeffs.items())
    for a, (i, ai) in enumerate(items):
        for j, aj in items[a + 1:]:
            cands.add(Fraction(ai - aj, j - i))
    corners = []
    for c in sorted(cands):
        eps = Fraction(1, 10**6)
        left = (eval1(p, c).value - eval1(p, c - eps).value) / eps
        right = (eval1(p, c + eps).value - eval1(p, c).value) / eps
        if right != left:
            corners.append((c, int(right - left)))
    return corners


@settings(max_examples=200, deadline=None)
@given(poly1s())
def test_roots_match_slope_scan(p):
    finite = [(r.value.value, r.order) for r in roots1(p) if not r.value.is_bottom]
    assert finite == _corner_scan(p)


@settings(max_examples=200, deadline=None)
@given(poly1s())
def test_orders_sum_to_degree(p):
    assert sum(r.order for r in roots1(p)) == p.degree


@settings(max_examples=200, deadline=None)
@given(poly1s())
def test_factor_round_trip(p):
    lead, roots = factor1(p)
    assert expand1(lead, roots) == canonical1(p)


@settings(max_examples=100, deadline=None)
@given(poly1s(6), poly1s(6))
def test_roots_of_product(p, q):
    merged = {}
    for r in roots1(p) + roots1(q):
        merged[r.value] = merged.get(r.value, 0) + r.order
    assert roots1(mul1(p, q)) == sorted(TropRoot(v, k) for v, k in merged.items())


@settings(max_examples=100, deadline=None)
@given(poly1s())
def test_canonical_is_same_function(p):
    c = canonical1(p)
    for x in range(-30, 31):
        assert eval1(p, Fraction(x, 3)) == eval1(c, Fraction(x, 3))
    assert eval1(p, BOTTOM) == eval1(c, BOTTOM)


def test_eval_examples():
    p = parse_poly("x^3+2x^2+3x+(-1)")
    assert eval1(p, 0) == TropNum(3)
    assert eval1(p, 5) == TropNum(15)
    assert eval1(p, BOTTOM) == TropNum(-1)
