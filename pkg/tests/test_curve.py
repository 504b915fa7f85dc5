from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropical.curve import (
    TropPoly2,
    balancing_sums,
    check_balancing,
    corner_locus,
    degree,
    dual_subdivision,
    max_attainers,
    mul2,
    newton_polygon,
    ray_weight,
    union,
)
from tropical.geometry import polygon_area
from tropical.parse import parse_poly

from conftest import CONIC, DOUBLE_CONIC, LINE, random_poly2, unimodular

F = Fraction


def _rays(curve):
    return sorted((e.direction, e.weight) for e in curve.edges if e.kind == "ray")


def test_line_fixture():
    c = corner_locus(parse_poly(LINE))
    assert c.vertices == ((F(-3, 2), F(11, 2)),)
    assert _rays(c) == [((-1, 0), 1), ((0, -1), 1), ((1, 1), 1)]
    assert degree(c) == 1


def test_conic_fixture():
    c = corner_locus(parse_poly(CONIC))
    assert set(c.vertices) == {(-1, 1), (-1, 2), (1, -1), (2, -1)}
    assert all(e.weight == 1 for e in c.edges)
    assert degree(c) == 2
    assert len(c.subdivision.cells) == 4


def test_double_conic_fixture():
    c = corner_locus(parse_poly(DOUBLE_CONIC))
    heavy = [e for e in c.edges if e.weight == 2]
    assert len(heavy) == 2
    assert degree(c) == 2
    assert ray_weight(c, (-1, 0)) == 2


def test_single_monomial_is_empty():
    c = corner_locus(parse_poly("3xy", bivariate=True))
    assert c.is_empty
    assert c.degree is None


def test_binomial_is_a_line():
    c2 = corner_locus(parse_poly("x + y"))
    assert [e.kind for e in c2.edges] == ["line"]
    assert c2.edges[0].direction in ((1, 1), (-1, -1))
    assert c2.edges[0].weight == 1
    assert c2.degree is None
    # a non-standard triangle has no degree
    assert corner_locus(parse_poly("0+x+(-2)y^2")).degree is None


def test_parallel_lines_weights():
    c = corner_locus(parse_poly("0 + 2x^2", bivariate=True))
    assert [(e.kind, e.weight) for e in c.edges] == [("line", 2)]
    assert c.edges[0].anchor == (-1, 0)


def test_non_triangle_degree_undefined():
    c = corner_locus(parse_poly("0+x+y+xy"))
    assert c.degree is None
    assert degree(c) is None
    assert all(b.balanced for b in check_balancing(c))


def test_balancing_sums_hand_built():
    incident = [[((-2, 0), 1), ((0, -3), 1), ((5, 5), 1)], [((1, 0), 2), ((-1, 0), 1)]]
    assert balancing_sums([None, None], incident) == [(0, 0), (1, 0)]


def _check_structure(p: TropPoly2, d: int):
    c = corner_locus(p)
    sub = c.subdivision
    assert all(b.balanced for b in check_balancing(c))
    assert len(c.vertices) <= d * d
    assert sum(sub.cell_area(k) for k in range(len(sub.cells))) == polygon_area(newton_polygon(p))
    assert polygon_area(newton_polygon(p)) == F(d * d, 2)
    # each edge is perpendicular to its dual edge, weight = lattice length
    for e in c.edges:
        a, b = sub.edges[e.dual].endpoints
        assert e.direction[0] * (b[0] - a[0]) + e.direction[1] * (b[1] - a[1]) == 0
        assert e.weight == sub.edges[e.dual].lattice_length
    return c


def _pointwise_oracle(c):
    p = c.polynomial
    sub = c.subdivision
    for k, v in enumerate(c.vertices):
        cell = sub.cells[c.vertex_cells[k]]
        assert set(cell) <= set(max_attainers(p, *v))
    for e in c.edges:
        base = c.edge_base(e)
        if e.kind == "segment":
            end = c.vertices[e.end]
            pt = ((base[0] + end[0]) / 2, (base[1] + end[1]) / 2)
        else:
            pt = (base[0] + e.direction[0], base[1] + e.direction[1])
        att = max_attainers(p, *pt)
        assert set(sub.edges[e.dual].endpoints) <= set(att)
        assert len(att) >= 2


@pytest.mark.parametrize("seed", range(40))
def test_random_curves(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 6)
    c = _check_structure(random_poly2(rng, d, full=rng.random() < 0.5), d)
    _pointwise_oracle(c)
    assert degree(c) == d
    for direction in ((-1, 0), (0, -1), (1, 1)):
        assert ray_weight(c, direction) == d


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(-50, 50), st.integers(-50, 50))
def test_off_curve_points_have_one_attainer(seed, x, y):
    rng = random.Random(seed)
    p = random_poly2(rng, rng.randint(1, 4))
    c = corner_locus(p)
    pt = (F(x, 7) + F(1, 997), F(y, 11) + F(1, 991))
    on_curve = len(max_attainers(p, *pt)) > 1
    dist_zero = any(_on_edge(c, e, pt) for e in c.edges)
    assert on_curve == dist_zero


def _on_edge(c, e, pt):
    base = c.edge_base(e)
    rx, ry = pt[0] - base[0], pt[1] - base[1]
    if rx * e.direction[1] - ry * e.direction[0] != 0:
        return False
    s = (rx * e.direction[0] + ry * e.direction[1]) / (e.direction[0] ** 2 + e.direction[1] ** 2)
    if e.kind == "ray":
        return s >= 0
    if e.kind == "segment":
        return 0 <= s <= c.edge_length(e)
    return True


def test_unimodular_fixture():
    for d in range(1, 6):
        c = _check_structure(unimodular(d), d)
        assert len(c.vertices) == d * d
        assert all(e.weight == 1 for e in c.edges)


def test_union_adds_weights():
    p = parse_poly(LINE)
    c = union(p, p)
    assert c.vertices == ((F(-3, 2), F(11, 2)),)
    assert _rays(c) == [((-1, 0), 2), ((0, -1), 2), ((1, 1), 2)]
    q = parse_poly(CONIC)
    u = union(p, q)
    assert degree(u) == 3
    assert mul2(p, q) == mul2(q, p)
    assert all(b.balanced for b in check_balancing(u))


def test_ordering_is_canonical():
    p = parse_poly(CONIC)
    shuffled = TropPoly2(dict(reversed(list(p.coeffs.items()))))
    assert corner_locus(p) == corner_locus(shuffled)
    assert dual_subdivision(p) == dual_subdivision(shuffled)


def test_nonregular_marks_hidden_points():
    # centre point below the hull: not a vertex of any cell
    p = TropPoly2({(0, 0): 0, (2, 0): 0, (0, 2): 0, (1, 0): -10, (0, 1): -10, (1, 1): -10})
    c = corner_locus(p)
    assert len(c.vertices) == 1
    assert _rays(c) == [((-1, 0), 2), ((0, -1), 2), ((1, 1), 2)]
