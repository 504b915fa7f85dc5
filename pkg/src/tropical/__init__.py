"""Exact tropical plane curves: roots, curves, stable intersections,
patchworking and amoebas."""

from .arith import BOTTOM, DomainError, TropNum, quant_add, trop_add, trop_mul, trop_pow
from .curve import (
    DualSubdivision,
    TropicalCurve,
    TropPoly2,
    check_balancing,
    corner_locus,
    degree,
    dual_subdivision,
    eval2,
    mul2,
    newton_polygon,
    union,
)
from .intersect import (
    ContractViolation,
    IntersectionPoint,
    NonTransverse,
    UndefinedDegree,
    bezout_total,
    self_intersection,
    stable_intersections,
    transverse_intersections,
)
from .parse import ParseError, parse_poly
from .poly1 import TropPoly1, TropRoot, canonical1, eval1, expand1, factor1, mul1, roots1

__all__ = [
    "BOTTOM", "DomainError", "TropNum", "quant_add", "trop_add", "trop_mul", "trop_pow",
    "DualSubdivision", "TropicalCurve", "TropPoly2", "check_balancing", "corner_locus",
    "degree", "dual_subdivision", "eval2", "mul2", "newton_polygon", "union",
    "ContractViolation", "IntersectionPoint", "NonTransverse", "UndefinedDegree",
    "bezout_total", "self_intersection", "stable_intersections", "transverse_intersections",
    "ParseError", "parse_poly",
    "TropPoly1", "TropRoot", "canonical1", "eval1", "expand1", "factor1", "mul1", "roots1",
]
