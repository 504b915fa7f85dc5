from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from tropical.curve import corner_locus, mul2
from tropical.intersect import (
    NonTransverse,
    UndefinedDegree,
    bezout_total,
    directions,
    self_intersection,
    stable_intersections,
    stable_intersections_for,
    transverse_intersections,
)
from tropical.parse import parse_poly

from conftest import CONIC, LINE, random_poly2

F = Fraction


def _curve(text):
    return corner_locus(parse_poly(text, bivariate=True))


def _pts(result):
    return [(p.point, p.multiplicity) for p in result.points]


def test_transverse_lines():
    c1 = _curve("0+0x+0y")
    c2 = _curve("0+(-2)x+(-1)y")
    assert [(p.point, p.multiplicity) for p in transverse_intersections(c1, c2)] == [((1, 1), 1)]


def test_transverse_rejects_overlap_and_vertex_hits():
    c = _curve("0+0x+0y")
    with pytest.raises(NonTransverse):
        transverse_intersections(c, c)
    with pytest.raises(NonTransverse):
        # the line's vertex (0, 0) lies inside a conic segment
        transverse_intersections(c, _curve(CONIC))


def test_overlapping_lines_meet_at_one_point():
    res = stable_intersections(_curve("0+0x+0y"), _curve("0+1x+0y"))
    assert _pts(res) == [((-1, 0), 1)]


def test_self_intersections():
    assert _pts(self_intersection(_curve(LINE))) == [((F(-3, 2), F(11, 2)), 1)]
    res = self_intersection(_curve(CONIC))
    assert sorted(_pts(res)) == sorted(((v, 1) for v in [(-1, 1), (-1, 2), (1, -1), (2, -1)]))
    assert res.total == 4


def test_line_through_conic_vertex():
    res = stable_intersections(_curve("0+1x+(-1)y"), _curve(CONIC))
    assert res.total == 2
    assert _pts(res) == [((-1, 1), 2)]


def test_multiplicity_is_parallelogram_area():
    # line x=0 (weight 1) against y=0 with weight 2: det 1, weights 1*2
    c1 = _curve("0+0x+0y")
    c2 = _curve("0+(-5)x+(-5)y^2+(-20)x^2")
    res = stable_intersections(c1, c2)
    assert res.total == 2


def test_undefined_degree():
    with pytest.raises(UndefinedDegree):
        stable_intersections(_curve("0+x+y+xy"), _curve("0+x+y"))


def test_direction_sequence():
    seq = list(itertools.islice(directions(), 6))
    assert seq == [(0, 1), (1, 2), (1, -2), (2, 1), (2, -1), (1, 3)]


def _stable_on_three(c1, c2):
    results = []
    for v in directions():
        got = stable_intersections_for(c1, c2, v)
        if got is not None:
            results.append(got[0])
            if len(results) == 3:
                return results


@pytest.mark.parametrize("seed", range(25))
def test_bezout_random(seed):
    rng = random.Random(1000 + seed)
    d1, d2 = rng.randint(1, 4), rng.randint(1, 4)
    p1, p2 = random_poly2(rng, d1, rng.random() < 0.5), random_poly2(rng, d2, rng.random() < 0.5)
    c1, c2 = corner_locus(p1), corner_locus(p2)
    assert bezout_total(c1, c2) == d1 * d2
    a, b, c = _stable_on_three(c1, c2)
    assert a == b == c
    support = set(c1.vertices) | set(c2.vertices)
    for p in a:
        if p.point not in support:
            # an isolated crossing must be a transverse meeting point
            assert sum(1 for e in c1.edges if _on(c1, e, p.point)) == 1
            assert sum(1 for e in c2.edges if _on(c2, e, p.point)) == 1


def _on(c, e, pt):
    base = c.edge_base(e)
    rx, ry = pt[0] - base[0], pt[1] - base[1]
    if rx * e.direction[1] - ry * e.direction[0] != 0:
        return False
    s = (rx * e.direction[0] + ry * e.direction[1]) / (e.direction[0] ** 2 + e.direction[1] ** 2)
    if e.kind == "segment":
        return 0 <= s <= c.edge_length(e)
    return e.kind == "line" or s >= 0


def _cell_area_at(c, pt):
    if pt not in c.vertices:
        return 0
    k = c.vertices.index(pt)
    return c.subdivision.cell_area(c.vertex_cells[k])


@pytest.mark.parametrize("seed", range(15))
def test_multiplicity_matches_mixed_cells(seed):
    # at each stable point the product subdivision has a cell whose area
    # splits into the two factor cells plus the mixed part
    rng = random.Random(seed)
    d1, d2 = rng.randint(1, 3), rng.randint(1, 3)
    p1, p2 = random_poly2(rng, d1), random_poly2(rng, d2)
    c1, c2 = corner_locus(p1), corner_locus(p2)
    prod = corner_locus(mul2(p1, p2))
    for p in stable_intersections(c1, c2).points:
        mixed = _cell_area_at(prod, p.point) - _cell_area_at(c1, p.point) - _cell_area_at(c2, p.point)
        assert mixed == p.multiplicity


def test_certificate_is_exact():
    res = self_intersection(_curve(CONIC))
    cert = res.certificate
    assert cert.samples == (cert.threshold / 2, cert.threshold / 4)
    assert cert.direction != res.check.direction
