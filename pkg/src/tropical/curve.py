"""Plane tropical curves from bivariate tropical polynomials.

The curve is built from the regular subdivision of the Newton polygon that is
induced by lifting each exponent ``(i, j)`` to height ``a_ij`` and projecting
the upper faces. Every 2-cell gives a curve vertex, every interior edge a
bounded edge and every boundary edge a ray; the weight of an edge is the
lattice length of its dual edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Mapping, Optional

from .arith import BOTTOM, TropNum, as_trop
from .geometry import (
    convex_hull,
    lattice_length,
    orient,
    polygon_area,
    primitive,
    upper_hull_1d,
)

Exponent = tuple[int, int]


class TropPoly2:
    """Finite map ``(i, j) -> a_ij`` with Bottom coefficients dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Exponent, object]):
        clean: dict[Exponent, Fraction] = {}
        for (i, j), a in coeffs.items():
            if i < 0 or j < 0 or int(i) != i or int(j) != j:
                raise ValueError(f"bad exponent {(i, j)}")
            a = as_trop(a)
            if not a.is_bottom:
                clean[(int(i), int(j))] = a.value
        if not clean:
            raise ValueError("a tropical polynomial needs a non-Bottom coefficient")
        self.coeffs = dict(sorted(clean.items()))

    @property
    def total_degree(self) -> int:
        return max(i + j for i, j in self.coeffs)

    def coefficient(self, i: int, j: int) -> TropNum:
        a = self.coeffs.get((i, j))
        return BOTTOM if a is None else TropNum(a)

    def negated(self) -> "TropPoly2":
        return TropPoly2({e: -a for e, a in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, TropPoly2) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __repr__(self):
        return f"TropPoly2({format_poly2(self)!r})"


def format_poly2(p: TropPoly2) -> str:
    terms = []
    for (i, j), a in p.coeffs.items():
        c = str(a) if a >= 0 else f"({a})"
        mono = ""
        if i:
            mono += "x" if i == 1 else f"x^{i}"
        if j:
            mono += "y" if j == 1 else f"y^{j}"
        terms.append(c + mono)
    return " + ".join(terms)


def eval2(p: TropPoly2, x, y) -> TropNum:
    x, y = as_trop(x), as_trop(y)
    best = BOTTOM
    for (i, j), a in p.coeffs.items():
        if (i and x.is_bottom) or (j and y.is_bottom):
            continue
        v = a + (i * x.value if i else 0) + (j * y.value if j else 0)
        if best.is_bottom or v > best.value:
            best = TropNum(v)
    return best


def mul2(p: TropPoly2, q: TropPoly2) -> TropPoly2:
    out: dict[Exponent, Fraction] = {}
    for (i, j), a in p.coeffs.items():
        for (k, l), b in q.coeffs.items():
            e, c = (i + k, j + l), a + b
            if e not in out or c > out[e]:
                out[e] = c
    return TropPoly2(out)


def newton_polygon(p: TropPoly2) -> list[Exponent]:
    """Vertices of the convex hull of the support, ccw (1 or 2 if degenerate)."""
    return convex_hull(p.coeffs)


def triangle_degree(p: TropPoly2) -> Optional[int]:
    """``d`` when the Newton polygon is the triangle (0,0),(d,0),(0,d), else None."""
    hull = newton_polygon(p)
    d = p.total_degree
    if d >= 1 and hull == [(0, 0), (d, 0), (0, d)]:
        return d
    return None


# -- dual subdivision ------------------------------------------------------


@dataclass(frozen=True)
class SubdivisionEdge:
    endpoints: tuple[Exponent, Exponent]
    lattice_length: int
    boundary: bool
    cells: tuple[int, ...]


@dataclass(frozen=True)
class DualSubdivision:
    """Regular subdivision of the Newton polygon.

    ``cells`` hold ccw lattice vertices; ``marked`` holds, per cell, every
    support point whose lift lies on the cell's upper face.
    """

    newton: tuple[Exponent, ...]
    cells: tuple[tuple[Exponent, ...], ...]
    marked: tuple[frozenset, ...]
    edges: tuple[SubdivisionEdge, ...]
    dimension: int

    def cell_area(self, k: int) -> Fraction:
        return polygon_area(self.cells[k])

    @property
    def lattice_points(self) -> list[Exponent]:
        return sorted({p for cell in self.cells for p in cell})


def _integer_heights(p: TropPoly2) -> dict[Exponent, int]:
    den = 1
    for a in p.coeffs.values():
        den = lcm(den, a.denominator)
    return {e: int(a * den) for e, a in p.coeffs.items()}


def _upper_faces(h: dict[Exponent, int]) -> list[frozenset]:
    pts = list(h)
    lifted = [(i, j, h[(i, j)]) for i, j in pts]
    faces: list[frozenset] = []
    seen_triples: set = set()
    for a, b, c in combinations(range(len(pts)), 3):
        if (a, b, c) in seen_triples:
            continue
        pa, pb, pc = lifted[a], lifted[b], lifted[c]
        ux, uy, uz = pb[0] - pa[0], pb[1] - pa[1], pb[2] - pa[2]
        vx, vy, vz = pc[0] - pa[0], pc[1] - pa[1], pc[2] - pa[2]
        nx, ny, nz = uy * vz - uz * vy, uz * vx - ux * vz, ux * vy - uy * vx
        if nz == 0:
            continue
        if nz < 0:
            nx, ny, nz = -nx, -ny, -nz
        on = []
        for k, (x, y, z) in enumerate(lifted):
            s = nx * (x - pa[0]) + ny * (y - pa[1]) + nz * (z - pa[2])
            if s > 0:
                break
            if s == 0:
                on.append(k)
        else:
            face = frozenset(pts[k] for k in on)
            faces.append(face)
            for t in combinations(on, 3):
                seen_triples.add(t)
    return faces


def dual_subdivision(p: TropPoly2) -> DualSubdivision:
    newton = tuple(newton_polygon(p))
    h = _integer_heights(p)
    if len(newton) == 1:
        return DualSubdivision(newton, (newton,), (frozenset(newton),), (), 0)
    if len(newton) == 2:
        return _segment_subdivision(p, newton, h)

    faces = _upper_faces(h)
    cells = []
    for face in faces:
        cells.append((tuple(convex_hull(face)), face))
    cells.sort()
    incidence: dict[tuple, list[int]] = {}
    for k, (poly, _) in enumerate(cells):
        for s in range(len(poly)):
            key = tuple(sorted((poly[s], poly[(s + 1) % len(poly)])))
            incidence.setdefault(key, []).append(k)
    edges = []
    for key in sorted(incidence):
        owners = incidence[key]
        if len(owners) > 2:
            raise AssertionError(f"edge {key} bounds {len(owners)} cells")
        edges.append(
            SubdivisionEdge(key, lattice_length(*key), len(owners) == 1, tuple(owners))
        )
    return DualSubdivision(
        newton,
        tuple(c for c, _ in cells),
        tuple(f for _, f in cells),
        tuple(edges),
        2,
    )


def _segment_subdivision(p, newton, h) -> DualSubdivision:
    p0, p1 = newton
    u = primitive((p1[0] - p0[0], p1[1] - p0[1]))
    steps = {}
    for e in p.coeffs:
        k = (e[0] - p0[0]) // u[0] if u[0] else (e[1] - p0[1]) // u[1]
        steps[k] = e
    hull = upper_hull_1d([(k, h[e]) for k, e in steps.items()])
    edges = []
    for (k1, _), (k2, _) in zip(hull, hull[1:]):
        a, b = steps[k1], steps[k2]
        edges.append(SubdivisionEdge((a, b), lattice_length(a, b), False, (0,)))
    return DualSubdivision(newton, (newton,), (frozenset(p.coeffs),), tuple(edges), 1)


# -- corner locus ----------------------------------------------------------


@dataclass(frozen=True)
class CurveEdge:
    """A weighted edge of a tropical curve.

    ``kind`` is ``"segment"`` (``start`` to ``end``), ``"ray"`` (from ``start``
    along ``direction``) or ``"line"`` (through ``anchor``; degenerate Newton
    polygons only). ``direction`` is primitive; for segments it points from
    ``start`` to ``end``. ``dual`` indexes the subdivision edge.
    """

    kind: str
    start: Optional[int]
    end: Optional[int]
    direction: tuple[int, int]
    weight: int
    dual: int
    anchor: Optional[tuple[Fraction, Fraction]] = None


@dataclass(frozen=True)
class TropicalCurve:
    vertices: tuple[tuple[Fraction, Fraction], ...]
    edges: tuple[CurveEdge, ...]
    vertex_cells: tuple[int, ...]
    subdivision: DualSubdivision
    degree: Optional[int]
    polynomial: TropPoly2 = field(compare=False, repr=False)

    @property
    def is_empty(self) -> bool:
        return not self.edges

    def edge_base(self, e: CurveEdge) -> tuple[Fraction, Fraction]:
        return e.anchor if e.kind == "line" else self.vertices[e.start]

    def edge_length(self, e: CurveEdge) -> Optional[Fraction]:
        """Parameter length along the primitive direction (None if unbounded)."""
        if e.kind != "segment":
            return None
        a, b = self.vertices[e.start], self.vertices[e.end]
        dx, dy = b[0] - a[0], b[1] - a[1]
        return dx / e.direction[0] if e.direction[0] else dy / e.direction[1]


def _cell_vertex(p: TropPoly2, cell, marked) -> tuple[Fraction, Fraction]:
    a = p.coeffs
    p0, q, r = cell[0], cell[1], cell[2]
    # (q - p0).V = a_p0 - a_q ;  (r - p0).V = a_p0 - a_r
    m11, m12, b1 = q[0] - p0[0], q[1] - p0[1], a[p0] - a[q]
    m21, m22, b2 = r[0] - p0[0], r[1] - p0[1], a[p0] - a[r]
    det = m11 * m22 - m12 * m21
    x = Fraction(b1 * m22 - m12 * b2, det)
    y = Fraction(m11 * b2 - b1 * m21, det)
    top = a[p0] + p0[0] * x + p0[1] * y
    for e in marked:
        if a[e] + e[0] * x + e[1] * y != top:
            raise AssertionError(f"monomial {e} off the face of cell {cell}")
    return x, y


def corner_locus(p: TropPoly2) -> TropicalCurve:
    """The tropical curve of ``p`` as a weighted embedded graph.

    A single monomial gives the empty curve (``is_empty``). A segment Newton
    polygon gives parallel weighted lines. Output ordering is canonical.
    """
    sub = dual_subdivision(p)
    deg = triangle_degree(p)
    if sub.dimension == 0:
        return TropicalCurve((), (), (), sub, deg, p)
    if sub.dimension == 1:
        return _parallel_lines(p, sub, deg)

    raw_vertices = [_cell_vertex(p, c, m) for c, m in zip(sub.cells, sub.marked)]
    order = sorted(range(len(raw_vertices)), key=lambda k: raw_vertices[k])
    new_id = {old: new for new, old in enumerate(order)}
    vertices = tuple(raw_vertices[k] for k in order)
    vertex_cells = tuple(order)

    edges = []
    for idx, se in enumerate(sub.edges):
        if se.boundary:
            (cell,) = se.cells
            poly = sub.cells[cell]
            a, b = se.endpoints
            # orient the dual edge the way the ccw cell boundary traverses it
            n = len(poly)
            ia = poly.index(a)
            if poly[(ia + 1) % n] != b:
                a, b = b, a
            normal = primitive((b[1] - a[1], a[0] - b[0]))
            edges.append(CurveEdge("ray", new_id[cell], None, normal, se.lattice_length, idx))
        else:
            c1, c2 = (new_id[c] for c in se.cells)
            s, t = min(c1, c2), max(c1, c2)
            vs, vt = vertices[s], vertices[t]
            d = primitive((vt[0] - vs[0], vt[1] - vs[1]))
            edges.append(CurveEdge("segment", s, t, d, se.lattice_length, idx))
    edges.sort(key=_edge_key)
    return TropicalCurve(vertices, tuple(edges), vertex_cells, sub, deg, p)


def _edge_key(e: CurveEdge):
    big = 1 << 62
    return (
        -1 if e.start is None else e.start,
        big if e.end is None else e.end,
        e.direction,
        e.anchor or (),
    )


def _parallel_lines(p, sub, deg) -> TropicalCurve:
    edges = []
    for idx, se in enumerate(sub.edges):
        a, b = se.endpoints
        u = primitive((b[0] - a[0], b[1] - a[1]))
        k = se.lattice_length
        c = (p.coeffs[a] - p.coeffs[b]) / k  # u.V on the line
        norm2 = u[0] ** 2 + u[1] ** 2
        anchor = (c * u[0] / norm2, c * u[1] / norm2)
        edges.append(CurveEdge("line", None, None, (-u[1], u[0]), k, idx, anchor))
    edges.sort(key=_edge_key)
    return TropicalCurve((), tuple(edges), (), sub, deg, p)


# -- checks ----------------------------------------------------------------


@dataclass(frozen=True)
class BalanceEntry:
    vertex: int
    point: tuple[Fraction, Fraction]
    total: tuple[int, int]

    @property
    def balanced(self) -> bool:
        return self.total == (0, 0)


def outgoing(curve: TropicalCurve, v: int) -> list[tuple[tuple[int, int], int]]:
    """(primitive direction, weight) of every edge leaving vertex ``v``."""
    out = []
    for e in curve.edges:
        if e.start == v:
            out.append((e.direction, e.weight))
        elif e.end == v:
            out.append(((-e.direction[0], -e.direction[1]), e.weight))
    return out


def check_balancing(curve: TropicalCurve) -> list[BalanceEntry]:
    report = []
    for v, pt in enumerate(curve.vertices):
        sx = sy = 0
        for (dx, dy), w in outgoing(curve, v):
            sx += w * dx
            sy += w * dy
        report.append(BalanceEntry(v, pt, (sx, sy)))
    return report


def balancing_sums(vertices, incident) -> list[tuple[int, int]]:
    """Balancing sums for a hand-built graph: ``incident[v]`` lists
    ``(direction, weight)`` pairs. Directions need not be primitive."""
    sums = []
    for v in range(len(vertices)):
        sx = sy = 0
        for d, w in incident[v]:
            g = gcd(abs(d[0]), abs(d[1]))
            sx += w * d[0] // g
            sy += w * d[1] // g
        sums.append((sx, sy))
    return sums


def degree(curve: TropicalCurve) -> Optional[int]:
    """Sum of weights of ``(-1, 0)`` rays; None unless the Newton polygon is a
    standard triangle."""
    if curve.degree is None:
        return None
    return ray_weight(curve, (-1, 0))


def ray_weight(curve: TropicalCurve, direction) -> int:
    return sum(e.weight for e in curve.edges if e.kind == "ray" and e.direction == tuple(direction))


def union(p1: TropPoly2, p2: TropPoly2) -> TropicalCurve:
    """Curve of the tropical product, i.e. the union with weights added."""
    return corner_locus(mul2(p1, p2))


def max_attainers(p: TropPoly2, x, y) -> list[Exponent]:
    """Exponents whose monomials attain the maximum at ``(x, y)``."""
    vals = {e: a + e[0] * x + e[1] * y for e, a in p.coeffs.items()}
    top = max(vals.values())
    return [e for e, v in vals.items() if v == top]
