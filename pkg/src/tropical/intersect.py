"""Transverse and stable intersections of tropical curves.

Stable intersection translates the second curve by ``tau * v`` for a direction
``v`` that is parallel to no edge of either curve. Below a threshold ``t0``
every crossing moves affinely in ``tau`` and the set of crossing edge pairs is
constant, so the limit at ``tau = 0`` is recovered exactly from two samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from math import gcd
from typing import Iterator, Optional

from .curve import CurveEdge, TropicalCurve
from .geometry import cross


class NonTransverse(ValueError):
    """The curves meet in a vertex or along a common segment."""


class UndefinedDegree(ValueError):
    """A curve's Newton polygon is not a standard triangle."""


class ContractViolation(AssertionError):
    """An internal consistency check failed (e.g. Bezout total mismatch)."""


@dataclass(frozen=True, order=True)
class IntersectionPoint:
    point: tuple[Fraction, Fraction]
    multiplicity: int
    stable: bool = False


@dataclass(frozen=True)
class PerturbationCertificate:
    direction: tuple[int, int]
    threshold: Fraction
    samples: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class StableResult:
    points: tuple[IntersectionPoint, ...]
    certificate: PerturbationCertificate
    check: PerturbationCertificate

    @property
    def total(self) -> int:
        return sum(p.multiplicity for p in self.points)


def _bounds(curve: TropicalCurve, e: CurveEdge):
    """Admissible parameter interval of an edge: (low, high) with None = infinite."""
    if e.kind == "segment":
        return Fraction(0), curve.edge_length(e)
    if e.kind == "ray":
        return Fraction(0), None
    return None, None


def _affine_crossing(b1, u1, b2, u2, v):
    """Parameters of the crossing of line b1+s1*u1 with line b2+tau*v+s2*u2.

    Returns ((s1_0, s1_1), (s2_0, s2_1)) with ``s = s_0 + s_1 * tau``.
    """
    det = cross(u1, u2)
    w = (b2[0] - b1[0], b2[1] - b1[1])
    s1 = (Fraction(cross(w, u2), det), Fraction(cross(v, u2), det))
    s2 = (Fraction(cross(w, u1), det), Fraction(cross(v, u1), det))
    return s1, s2


def _multiplicity(e1: CurveEdge, e2: CurveEdge) -> int:
    return e1.weight * e2.weight * abs(cross(e1.direction, e2.direction))


def _collinear_overlap(c1, e1, c2, e2) -> bool:
    b1, b2 = c1.edge_base(e1), c2.edge_base(e2)
    u = e1.direction
    if cross(u, (b2[0] - b1[0], b2[1] - b1[1])) != 0:
        return False  # parallel, distinct lines
    # project e2's parameter interval onto e1's line
    lo1, hi1 = _bounds(c1, e1)
    scale = Fraction(u[0] * e2.direction[0] + u[1] * e2.direction[1], u[0] ** 2 + u[1] ** 2)
    off = Fraction((b2[0] - b1[0]) * u[0] + (b2[1] - b1[1]) * u[1], u[0] ** 2 + u[1] ** 2)
    lo2, hi2 = _bounds(c2, e2)
    ends = []
    for s in (lo2, hi2):
        ends.append(None if s is None else off + scale * s)
    # interval of e2 on e1's parameter axis
    if scale > 0:
        a, b = ends[0], ends[1]
    else:
        a, b = ends[1], ends[0]
    lo = lo1 if a is None else (a if lo1 is None else max(lo1, a))
    hi = hi1 if b is None else (b if hi1 is None else min(hi1, b))
    return lo is None or hi is None or lo <= hi


def transverse_intersections(c1: TropicalCurve, c2: TropicalCurve) -> list[IntersectionPoint]:
    """Crossings with multiplicity ``w1 * w2 * |det(u1, u2)|``.

    Raises :class:`NonTransverse` if the curves share a segment or meet at a
    vertex of either curve.
    """
    found: dict = {}
    for e1 in c1.edges:
        for e2 in c2.edges:
            if cross(e1.direction, e2.direction) == 0:
                if _collinear_overlap(c1, e1, c2, e2):
                    raise NonTransverse(f"edges {e1} and {e2} overlap")
                continue
            s1, s2 = _affine_crossing(c1.edge_base(e1), e1.direction, c2.edge_base(e2), e2.direction, (0, 0))
            where = []
            for s, (lo, hi) in ((s1[0], _bounds(c1, e1)), (s2[0], _bounds(c2, e2))):
                if (lo is not None and s < lo) or (hi is not None and s > hi):
                    break
                where.append(s == lo or s == hi)
            else:
                b1 = c1.edge_base(e1)
                pt = (b1[0] + s1[0] * e1.direction[0], b1[1] + s1[0] * e1.direction[1])
                if any(where):
                    raise NonTransverse(f"curves meet at a vertex {pt}")
                found[pt] = found.get(pt, 0) + _multiplicity(e1, e2)
    return sorted(IntersectionPoint(p, m) for p, m in found.items())


def directions() -> Iterator[tuple[int, int]]:
    """Fixed sequence of primitive vectors: (0,1), (1,2), (1,-2), (2,1), (2,-1), ..."""
    yield (0, 1)
    for n in count(2):
        for a in range(1, n):
            b = n - a
            if gcd(a, b) == 1 and (a, b) != (1, 1):
                yield (a, b)
                yield (a, -b)


def _events(c1, c2, v):
    """Crossing parameters of all non-parallel edge pairs, affine in tau."""
    out = []
    for e1 in c1.edges:
        for e2 in c2.edges:
            if cross(e1.direction, e2.direction) == 0:
                continue
            s1, s2 = _affine_crossing(c1.edge_base(e1), e1.direction, c2.edge_base(e2), e2.direction, v)
            out.append((e1, e2, s1, s2))
    return out


def _threshold(pairs, c1, c2) -> Fraction:
    """Half the smallest positive tau at which a crossing enters or leaves an edge."""
    smallest = None
    for e1, e2, s1, s2 in pairs:
        for (s0, ds), (lo, hi) in ((s1, _bounds(c1, e1)), (s2, _bounds(c2, e2))):
            for bound in (lo, hi):
                if bound is None or ds == 0:
                    continue
                tau = (bound - s0) / ds
                if tau > 0 and (smallest is None or tau < smallest):
                    smallest = tau
    return Fraction(1) if smallest is None else smallest / 2


def _crossings_at(c1, c2, v, tau):
    """Exact crossings of c1 with c2 translated by tau*v.

    Returns {(edge1, edge2): point} or None if a crossing hits an edge end.
    """
    shift = (tau * v[0], tau * v[1])
    hits = {}
    for i, e1 in enumerate(c1.edges):
        for j, e2 in enumerate(c2.edges):
            if cross(e1.direction, e2.direction) == 0:
                continue
            b2 = c2.edge_base(e2)
            b2 = (b2[0] + shift[0], b2[1] + shift[1])
            s1, s2 = _affine_crossing(c1.edge_base(e1), e1.direction, b2, e2.direction, (0, 0))
            inside = True
            for s, (lo, hi) in ((s1[0], _bounds(c1, e1)), (s2[0], _bounds(c2, e2))):
                if s == lo or s == hi:
                    return None
                if (lo is not None and s < lo) or (hi is not None and s > hi):
                    inside = False
            if inside:
                b1 = c1.edge_base(e1)
                hits[(i, j)] = (b1[0] + s1[0] * e1.direction[0], b1[1] + s1[0] * e1.direction[1])
    return hits


def _admissible(c1, c2, v) -> bool:
    return all(cross(e.direction, v) != 0 for e in c1.edges + c2.edges)


def _perturbed_limit(c1, c2, v):
    pairs = _events(c1, c2, v)
    t0 = _threshold(pairs, c1, c2)
    tau1, tau2 = t0 / 2, t0 / 4
    far = _crossings_at(c1, c2, v, tau1)
    near = _crossings_at(c1, c2, v, tau2)
    if far is None or near is None or far.keys() != near.keys():
        return None
    limits: dict = {}
    for (i, j), p_near in near.items():
        p_far = far[(i, j)]
        lim = (2 * p_near[0] - p_far[0], 2 * p_near[1] - p_far[1])
        limits[lim] = limits.get(lim, 0) + _multiplicity(c1.edges[i], c2.edges[j])
    pts = tuple(sorted(IntersectionPoint(p, m, True) for p, m in limits.items()))
    return pts, PerturbationCertificate(v, t0, (tau1, tau2))


def _require_degree(*curves):
    for c in curves:
        if c.degree is None:
            raise UndefinedDegree("stable intersection needs curves with a standard-triangle Newton polygon")


def stable_intersections_for(
    c1: TropicalCurve, c2: TropicalCurve, direction: tuple[int, int]
) -> Optional[tuple[tuple[IntersectionPoint, ...], PerturbationCertificate]]:
    """Perturbation limit along one given direction, or None if it is not admissible."""
    if not _admissible(c1, c2, direction):
        return None
    return _perturbed_limit(c1, c2, direction)


def stable_intersections(c1: TropicalCurve, c2: TropicalCurve) -> StableResult:
    """Stable intersection points with multiplicities.

    The result is computed along the first admissible direction and confirmed
    along the next one; disagreement raises :class:`ContractViolation`.
    """
    _require_degree(c1, c2)
    results = []
    for v in directions():
        got = stable_intersections_for(c1, c2, v)
        if got is not None:
            results.append(got)
            if len(results) == 2:
                break
    (pts, cert), (pts2, cert2) = results
    if pts != pts2:
        raise ContractViolation(f"stable intersection depends on direction: {pts} vs {pts2}")
    return StableResult(pts, cert, cert2)


def bezout_total(c1: TropicalCurve, c2: TropicalCurve) -> int:
    res = stable_intersections(c1, c2)
    if res.total != c1.degree * c2.degree:
        raise ContractViolation(f"Bezout total {res.total} != {c1.degree} * {c2.degree}")
    return res.total


def self_intersection(c: TropicalCurve) -> StableResult:
    return stable_intersections(c, c)
