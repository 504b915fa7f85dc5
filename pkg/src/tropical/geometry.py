"""Exact planar helpers shared by the curve and intersection code."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple

Point = Tuple[Fraction, Fraction]
IntVec = Tuple[int, int]


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def orient(o, a, b):
    """Twice the signed area of triangle (o, a, b); positive when ccw."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def primitive(v) -> IntVec:
    """Primitive integer vector along a nonzero rational vector."""
    a, b = Fraction(v[0]), Fraction(v[1])
    if a == 0 and b == 0:
        raise ValueError("zero vector has no direction")
    den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    ia, ib = int(a * den), int(b * den)
    g = gcd(abs(ia), abs(ib))
    return ia // g, ib // g


def lattice_length(p, q) -> int:
    return gcd(abs(q[0] - p[0]), abs(q[1] - p[1]))


def convex_hull(points: Iterable[Sequence]) -> list:
    """Strictly convex hull in ccw order, starting at the lexicographic minimum.

    Collinear boundary points are dropped. Degenerate inputs return one point
    or the two endpoints of a segment.
    """
    pts = sorted(set((p[0], p[1]) for p in points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def polygon_area(poly: Sequence) -> Fraction:
    """Unsigned area of a simple polygon given in order."""
    n = len(poly)
    if n < 3:
        return Fraction(0)
    s = sum(cross(poly[i], poly[(i + 1) % n]) for i in range(n))
    return abs(Fraction(s, 2))


def upper_hull_1d(points: Sequence[tuple]) -> list:
    """Upper concave hull of (abscissa, height) pairs, left to right.

    Collinear middle points are dropped so every returned vertex is a corner.
    """
    pts = sorted(points)
    hull: list = []
    for p in pts:
        while len(hull) >= 2 and orient(hull[-2], hull[-1], p) >= 0:
            hull.pop()
        hull.append(p)
    return hull


def point_in_polygon(pt, poly: Sequence) -> bool:
    """Even-odd ray casting; exact for rational coordinates.

    The caller guarantees ``pt`` is not on the boundary.
    """
    x, y = pt
    inside = False
    n = len(poly)
    for i in range(n):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            xc = x1 + Fraction(y - y1) * (x2 - x1) / (y2 - y1)
            if xc > x:
                inside = not inside
    return inside
