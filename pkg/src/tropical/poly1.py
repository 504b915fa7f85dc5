"""Univariate tropical polynomials: evaluation, canonical form, roots, factors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .arith import BOTTOM, TropNum, as_trop
from .geometry import upper_hull_1d


class TropPoly1:
    """Finite map ``exponent -> coefficient`` with Bottom entries dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object]):
        clean: dict[int, Fraction] = {}
        for i, a in coeffs.items():
            if int(i) != i or i < 0:
                raise ValueError(f"exponent must be a non-negative integer, got {i}")
            a = as_trop(a)
            if not a.is_bottom:
                clean[int(i)] = a.value
        if not clean:
            raise ValueError("a tropical polynomial needs a non-Bottom coefficient")
        self.coeffs = dict(sorted(clean.items()))

    @property
    def degree(self) -> int:
        return max(self.coeffs)

    @property
    def lowdeg(self) -> int:
        return min(self.coeffs)

    def coefficient(self, i: int) -> TropNum:
        return TropNum(self.coeffs[i]) if i in self.coeffs else BOTTOM

    def __eq__(self, other):
        return isinstance(other, TropPoly1) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __repr__(self):
        return f"TropPoly1({format_poly1(self)!r})"


@dataclass(frozen=True, order=True)
class TropRoot:
    value: TropNum
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("root order must be positive")


def format_poly1(p: TropPoly1) -> str:
    terms = []
    for i, a in p.coeffs.items():
        c = str(a) if a >= 0 else f"({a})"
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        terms.append(c + mono)
    return " + ".join(terms)


def eval1(p: TropPoly1, x) -> TropNum:
    x = as_trop(x)
    if x.is_bottom:
        return p.coefficient(0)
    return TropNum(max(a + i * x.value for i, a in p.coeffs.items()))


def _hull(p: TropPoly1) -> list:
    return upper_hull_1d(list(p.coeffs.items()))


def canonical1(p: TropPoly1) -> TropPoly1:
    """Largest-coefficient representative of the same polynomial function."""
    hull = _hull(p)
    out = {hull[0][0]: hull[0][1]}
    for (i, ai), (j, aj) in zip(hull, hull[1:]):
        slope = Fraction(aj - ai, j - i)
        for k in range(i + 1, j + 1):
            out[k] = ai + slope * (k - i)
    return TropPoly1(out)


def roots1(p: TropPoly1) -> list[TropRoot]:
    """Corners of the graph with their orders, Bottom first, ascending.

    A Bottom root of order ``lowdeg`` is reported when the constant term is
    missing, so the orders always add up to the degree.
    """
    roots = []
    if p.lowdeg > 0:
        roots.append(TropRoot(BOTTOM, p.lowdeg))
    hull = _hull(p)
    for (i, ai), (j, aj) in zip(hull, hull[1:]):
        roots.append(TropRoot(TropNum(Fraction(ai - aj, j - i)), j - i))
    return sorted(roots)


def mul1(p: TropPoly1, q: TropPoly1) -> TropPoly1:
    """Tropical product: coefficient ``k`` is ``max_{i+j=k}(a_i + b_j)``."""
    out: dict[int, Fraction] = {}
    for i, a in p.coeffs.items():
        for j, b in q.coeffs.items():
            c = a + b
            if i + j not in out or c > out[i + j]:
                out[i + j] = c
    return TropPoly1(out)


def factor1(p: TropPoly1) -> tuple[TropNum, list[TropRoot]]:
    """Leading coefficient and roots, so that ``lead * prod (x + r)^k`` is ``p``
    as a function."""
    return p.coefficient(p.degree), roots1(p)


def expand1(lead, roots) -> TropPoly1:
    """Multiply out ``lead * prod (x + r)^order``; a Bottom root contributes ``x``."""
    out = TropPoly1({0: as_trop(lead)})
    for r in roots:
        factor = TropPoly1({1: 0}) if r.value.is_bottom else TropPoly1({0: r.value, 1: 0})
        for _ in range(r.order):
            out = mul1(out, factor)
    return out
