"""Deterministic JSON encoding of every result type.

Rationals are written as lowest-terms strings (``"3/2"``, ``"-4"``), floats
with 12 significant digits, keys sorted. Each document carries a top-level
``"schema"`` tag. ``negate=True`` maps max-convention geometry back to the
min convention (points and directions change sign).
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .amoeba import AmoebaSample, ConvergenceTable
from .arith import TropNum
from .curve import DualSubdivision, TropicalCurve, TropPoly2, format_poly2
from .intersect import IntersectionPoint, StableResult
from .patchwork import Arrangement, HarnackResult, RealTropicalCurve
from .poly1 import TropPoly1, TropRoot, format_poly1

SCHEMA_VERSION = 1


def _q(x) -> str:
    return str(Fraction(x))


def _pt(p, negate=False):
    s = -1 if negate else 1
    return [_q(s * p[0]), _q(s * p[1])]


def _vec(v, negate=False):
    s = -1 if negate else 1
    return [s * v[0], s * v[1]]


def _num(x: float):
    return float(f"{x:.12g}")


def _trop(a: TropNum, negate=False) -> str:
    if a.is_bottom:
        return "inf" if negate else "-inf"
    return _q(-a.value if negate else a.value)


def _doc(kind: str, body: dict) -> dict:
    body["schema"] = f"tropical.{kind}/{SCHEMA_VERSION}"
    return body


def curve_doc(c: TropicalCurve, negate=False) -> dict:
    edges = []
    for e in c.edges:
        d = {"kind": e.kind, "direction": _vec(e.direction, negate), "weight": e.weight, "dual": e.dual}
        if e.kind == "segment":
            d["vertices"] = [e.start, e.end]
        elif e.kind == "ray":
            d["vertex"] = e.start
        else:
            d["anchor"] = _pt(e.anchor, negate)
        edges.append(d)
    return _doc("curve", {
        "convention": "min" if negate else "max",
        "degree": "undefined" if c.degree is None else c.degree,
        "empty": c.is_empty,
        "vertices": [_pt(v, negate) for v in c.vertices],
        "edges": edges,
        "vertex_cells": list(c.vertex_cells),
    })


def subdivision_doc(s: DualSubdivision) -> dict:
    return _doc("subdivision", {
        "newton": [list(p) for p in s.newton],
        "dimension": s.dimension,
        "cells": [[list(p) for p in cell] for cell in s.cells],
        "cell_areas": [_q(s.cell_area(k)) for k in range(len(s.cells))],
        "edges": [
            {"endpoints": [list(p) for p in e.endpoints], "lattice_length": e.lattice_length,
             "boundary": e.boundary, "cells": list(e.cells)}
            for e in s.edges
        ],
    })


def intersections_doc(points, certificate=None, negate=False) -> dict:
    body = {
        "points": [
            {"point": _pt(p.point, negate), "multiplicity": p.multiplicity, "stable": p.stable}
            for p in points
        ],
        "total": sum(p.multiplicity for p in points),
        "certificate": None,
    }
    if certificate is not None:
        body["certificate"] = {
            "direction": _vec(certificate.direction, negate),
            "threshold": _q(certificate.threshold),
            "samples": [_q(x) for x in certificate.samples],
        }
    return _doc("intersection", body)


def kept_doc(kept) -> dict:
    return {str(k): [list(q) for q in sorted(v)] for k, v in sorted(kept.items())}


def real_curve_doc(r: RealTropicalCurve, negate=False) -> dict:
    return _doc("realcurve", {
        "kept": kept_doc(r.kept),
        "arcs": [
            {"edge": a.edge, "quadrant": list(a.quadrant), "kind": a.kind,
             "points": [_pt(p, negate) for p in a.points], "direction": _vec(a.direction, negate)}
            for a in r.arcs
        ],
        "joints": [
            {"vertex": j.vertex, "quadrant": list(j.quadrant), "point": _pt(j.point, negate),
             "degree": j.degree}
            for j in r.joints
        ],
        "bonds": [{"edge": b.edge, "quadrants": [list(q) for q in b.quadrants], "tag": b.tag}
                  for b in r.bonds],
    })


def arrangement_doc(a: Arrangement) -> dict:
    return _doc("arrangement", {
        "model": a.model,
        "components": a.components,
        "pseudolines": a.pseudolines,
        "bounded": a.bounded,
        "nesting": None if a.nesting is None else {str(k): v for k, v in sorted(a.nesting.items())},
        "members": [[[e, list(q)] for e, q in comp] for comp in a.members],
    })


def harnack_doc(h: HarnackResult) -> dict:
    return _doc("harnack", {
        "best": h.best,
        "complete": h.complete,
        "evaluated": h.evaluated,
        "witness": {f"{p[0]},{p[1]}": s for p, s in sorted(h.witness.items())},
        "arrangement": arrangement_doc(h.arrangement),
    })


def amoeba_doc(s: AmoebaSample, negate=False) -> dict:
    sign = -1.0 if negate else 1.0
    g = s.grid
    return _doc("amoeba", {
        "fibers": s.fibers,
        "skipped": s.skipped,
        "max_residual": _num(s.max_residual),
        "grid": {"lo": g.lo, "hi": g.hi, "n_modulus": g.n_modulus, "n_arg": g.n_arg},
        "points": [[_num(sign * x), _num(sign * y)] for x, y in np.asarray(s.points)],
    })


def convergence_doc(t: ConvergenceTable) -> dict:
    return _doc("convergence", {
        "rows": [{"t": _num(a), "distance": _num(b)} for a, b in t.rows],
        "slope": _num(t.slope),
        "intercept": _num(t.intercept),
        "residual": _num(t.residual),
        "monotone": t.monotone,
    })


def roots_doc(roots: list[TropRoot], negate=False) -> dict:
    rs = [{"value": _trop(r.value, negate), "order": r.order} for r in roots]
    if negate:
        rs.reverse()
    return _doc("roots", {"roots": rs, "total_order": sum(r.order for r in roots)})


def poly_doc(p) -> dict:
    if isinstance(p, TropPoly1):
        return _doc("poly1", {"text": format_poly1(p),
                               "coefficients": {str(i): _q(a) for i, a in p.coeffs.items()}})
    return _doc("poly2", {"text": format_poly2(p),
                           "coefficients": {f"{i},{j}": _q(a) for (i, j), a in p.coeffs.items()}})


def to_doc(obj, negate=False) -> dict:
    if isinstance(obj, dict) and "schema" in obj:
        return obj
    if isinstance(obj, TropicalCurve):
        return curve_doc(obj, negate)
    if isinstance(obj, DualSubdivision):
        return subdivision_doc(obj)
    if isinstance(obj, StableResult):
        return intersections_doc(obj.points, obj.certificate, negate)
    if isinstance(obj, list) and all(isinstance(p, IntersectionPoint) for p in obj):
        return intersections_doc(obj, None, negate)
    if isinstance(obj, RealTropicalCurve):
        return real_curve_doc(obj, negate)
    if isinstance(obj, Arrangement):
        return arrangement_doc(obj)
    if isinstance(obj, HarnackResult):
        return harnack_doc(obj)
    if isinstance(obj, AmoebaSample):
        return amoeba_doc(obj, negate)
    if isinstance(obj, ConvergenceTable):
        return convergence_doc(obj)
    if isinstance(obj, (TropPoly1, TropPoly2)):
        return poly_doc(obj)
    raise TypeError(f"no JSON encoding for {type(obj).__name__}")


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_json(obj, negate=False) -> bytes:
    return dumps(to_doc(obj, negate)).encode("utf-8")
