"""Command line interface: ``tropical <subcommand> ...``.

Exit status is 0 on success, 2 on input errors and 3 when an internal
contract check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import serialize
from .amoeba import ComplexCurveSpec, Grid, amoeba_sample, convergence_study, dist_to_curve, unit_twists
from .arith import TropNum, quant_add
from .curve import TropPoly2, check_balancing, corner_locus, degree, dual_subdivision, eval2, union
from .intersect import (
    NonTransverse,
    UndefinedDegree,
    bezout_total,
    self_intersection,
    stable_intersections,
    transverse_intersections,
)
from .parse import ParseError, parse_poly
from .patchwork import (
    MODELS,
    build_real_curve,
    components,
    from_signs,
    harnack_search,
    sign_vertices,
    validate_erasure,
    validate_patchwork_input,
)
from .poly1 import TropPoly1, eval1, factor1, roots1
from .svg import RenderConfig, emit_svg

COMMANDS = (
    "eval", "roots", "factor", "curve", "subdiv", "balance", "degree", "union",
    "intersect", "stable", "selfint", "bezout", "patchwork", "components",
    "harnack", "amoeba", "dequant",
)


class InputError(ValueError):
    pass


def _source(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text(encoding="utf-8").strip()
    return text


class _Ctx:
    def __init__(self, args):
        self.args = args
        self.negate = args.min_convention
        self.convention = "min" if self.negate else "max"

    def poly2(self, text) -> TropPoly2:
        return parse_poly(_source(text), self.convention, bivariate=True)

    def poly(self, text):
        return parse_poly(_source(text), self.convention)

    def curve(self, text):
        return corner_locus(self.poly2(text))

    def emit(self, obj, out):
        out.write(serialize.emit_json(obj, self.negate).decode("utf-8"))

    def emit_doc(self, kind, body, out):
        body["schema"] = f"tropical.{kind}/{serialize.SCHEMA_VERSION}"
        out.write(serialize.dumps(body))

    def svg(self, obj):
        if self.args.svg:
            cfg = RenderConfig(ray_length=self.args.ray_length)
            Path(self.args.svg).write_bytes(emit_svg(obj, cfg, self.negate))


def _trop_arg(text: str, negate: bool) -> TropNum:
    a = TropNum.parse(text)
    if negate and not a.is_bottom:
        return TropNum(-a.value)
    return a


def cmd_eval(ctx, out):
    a = ctx.args
    p = ctx.poly(a.poly)
    x = _trop_arg(a.x, ctx.negate)
    if isinstance(p, TropPoly1) and a.y is None:
        v = eval1(p, x)
    else:
        if isinstance(p, TropPoly1):
            p = TropPoly2({(i, 0): c for i, c in p.coeffs.items()})
        y = _trop_arg(a.y if a.y is not None else "0", ctx.negate)
        v = eval2(p, x, y)
    ctx.emit_doc("value", {"value": serialize._trop(v, ctx.negate)}, out)


def _poly1(ctx, text) -> TropPoly1:
    p = ctx.poly(text)
    if not isinstance(p, TropPoly1):
        raise InputError("expected a univariate polynomial")
    return p


def cmd_roots(ctx, out):
    out.write(serialize.dumps(serialize.roots_doc(roots1(_poly1(ctx, ctx.args.poly)), ctx.negate)))


def cmd_factor(ctx, out):
    lead, roots = factor1(_poly1(ctx, ctx.args.poly))
    doc = serialize.roots_doc(roots, ctx.negate)
    doc["schema"] = f"tropical.factor/{serialize.SCHEMA_VERSION}"
    doc["lead"] = serialize._trop(lead, ctx.negate)
    out.write(serialize.dumps(doc))


def cmd_curve(ctx, out):
    c = ctx.curve(ctx.args.poly)
    ctx.svg(c)
    ctx.emit(c, out)


def cmd_subdiv(ctx, out):
    s = dual_subdivision(ctx.poly2(ctx.args.poly))
    ctx.svg(s)
    ctx.emit(s, out)


def cmd_balance(ctx, out):
    c = ctx.curve(ctx.args.poly)
    sgn = -1 if ctx.negate else 1
    rows = [
        {"vertex": b.vertex, "point": serialize._pt(b.point, ctx.negate),
         "sum": [sgn * b.total[0], sgn * b.total[1]], "balanced": b.balanced}
        for b in check_balancing(c)
    ]
    ctx.emit_doc("balance", {"vertices": rows, "balanced": all(r["balanced"] for r in rows)}, out)


def cmd_degree(ctx, out):
    d = degree(ctx.curve(ctx.args.poly))
    ctx.emit_doc("degree", {"degree": "undefined" if d is None else d}, out)


def cmd_union(ctx, out):
    c = union(ctx.poly2(ctx.args.poly1), ctx.poly2(ctx.args.poly2))
    ctx.svg(c)
    ctx.emit(c, out)


def cmd_intersect(ctx, out):
    pts = transverse_intersections(ctx.curve(ctx.args.poly1), ctx.curve(ctx.args.poly2))
    ctx.emit(pts, out)


def cmd_stable(ctx, out):
    ctx.emit(stable_intersections(ctx.curve(ctx.args.poly1), ctx.curve(ctx.args.poly2)), out)


def cmd_selfint(ctx, out):
    ctx.emit(self_intersection(ctx.curve(ctx.args.poly)), out)


def cmd_bezout(ctx, out):
    c1, c2 = ctx.curve(ctx.args.poly1), ctx.curve(ctx.args.poly2)
    total = bezout_total(c1, c2)
    ctx.emit_doc("bezout", {"total": total, "degrees": [c1.degree, c2.degree]}, out)


def _signs(ctx, curve):
    domain = sign_vertices(curve)
    a = ctx.args
    if a.signs_file:
        raw = json.loads(Path(a.signs_file).read_text(encoding="utf-8"))
        signs = {}
        for key, s in raw.items():
            i, j = (int(v) for v in key.split(","))
            signs[(i, j)] = 1 if s > 0 else -1
        return signs
    text = a.signs or "+" * len(domain)
    if len(text) != len(domain) or set(text) - {"+", "-"}:
        raise InputError(f"--signs needs {len(domain)} characters from '+-' for vertices {domain}")
    return {p: (1 if ch == "+" else -1) for p, ch in zip(domain, text)}


def _kept(ctx, curve):
    if ctx.args.erasure:
        raw = json.loads(Path(ctx.args.erasure).read_text(encoding="utf-8"))
        return {int(k): frozenset(tuple(q) for q in v) for k, v in raw.items()}
    return from_signs(curve, _signs(ctx, curve))


def _patchwork_curve(ctx, text):
    c = ctx.curve(text)
    problems = validate_patchwork_input(c)
    if problems:
        raise InputError("; ".join(p.detail for p in problems))
    return c


def cmd_patchwork(ctx, out):
    c = _patchwork_curve(ctx, ctx.args.poly)
    kept = _kept(ctx, c)
    problems = validate_erasure(c, kept)
    if problems:
        raise InputError("; ".join(p.detail for p in problems))
    real = build_real_curve(c, kept)
    ctx.svg(real)
    ctx.emit(real, out)


def cmd_components(ctx, out):
    c = _patchwork_curve(ctx, ctx.args.poly)
    kept = _kept(ctx, c)
    problems = validate_erasure(c, kept)
    if problems:
        raise InputError("; ".join(p.detail for p in problems))
    real = build_real_curve(c, kept)
    models = MODELS if ctx.args.model == "all" else (ctx.args.model,)
    docs = {m: serialize.arrangement_doc(components(real, m)) for m in models}
    if len(docs) == 1:
        out.write(serialize.dumps(next(iter(docs.values()))))
    else:
        ctx.emit_doc("arrangements", {"models": docs}, out)


def cmd_harnack(ctx, out):
    c = _patchwork_curve(ctx, ctx.args.poly)
    a = ctx.args
    res = harnack_search(c, a.mode, a.budget, a.seed)
    ctx.emit(res, out)


def _twists(ctx, p: TropPoly2):
    if not ctx.args.twists:
        return unit_twists(p)
    raw = json.loads(_source(ctx.args.twists))
    tw = {}
    for key, v in raw.items():
        i, j = (int(s) for s in key.split(","))
        tw[(i, j)] = complex(v[0], v[1]) if isinstance(v, list) else complex(v)
    return tw


def cmd_amoeba(ctx, out):
    a = ctx.args
    p = ctx.poly2(a.poly)
    tw = _twists(ctx, p)
    grid = Grid(a.lo, a.hi, a.n_modulus, a.n_arg)
    if a.study:
        ts = [float(s) for s in a.study.split(",")]
        ctx.emit(convergence_study(p, tw, ts, grid, seed=a.seed), out)
        return
    sample = amoeba_sample(ComplexCurveSpec(p, tw, a.t), grid, seed=a.seed)
    if a.svg:
        from .svg import amoeba_svg

        Path(a.svg).write_bytes(amoeba_svg(sample, corner_locus(p), RenderConfig(ray_length=a.ray_length)))
    doc = serialize.amoeba_doc(sample, ctx.negate)
    doc["distance"] = serialize._num(dist_to_curve(sample, corner_locus(p)))
    out.write(serialize.dumps(doc))


def cmd_dequant(ctx, out):
    a = ctx.args
    x, y = float(Fraction(a.x)), float(Fraction(a.y))
    if ctx.negate:
        v = -quant_add(-x, -y, a.t)
        exact = min(x, y)
    else:
        v = quant_add(x, y, a.t)
        exact = max(x, y)
    ctx.emit_doc("dequant", {"value": serialize._num(v), "tropical": serialize._num(exact),
                             "gap": serialize._num(abs(v - exact))}, out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--min-convention", action="store_true",
                        help="read and write polynomials with min instead of max")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    common.add_argument("--svg", metavar="PATH", help="also write an SVG rendering")
    common.add_argument("--ray-length", type=float, default=2.0, help="SVG ray truncation length")

    parser = argparse.ArgumentParser(prog="tropical", description="Exact tropical plane curves.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help, polys=("poly",)):
        sp = sub.add_parser(name, parents=[common], help=help)
        for p in polys:
            sp.add_argument(p, help="polynomial text, or @FILE")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("eval", cmd_eval, "evaluate a polynomial")
    sp.add_argument("-x", required=True)
    sp.add_argument("-y")
    add("roots", cmd_roots, "roots of a univariate polynomial")
    add("factor", cmd_factor, "factor a univariate polynomial")
    add("curve", cmd_curve, "tropical curve (corner locus)")
    add("subdiv", cmd_subdiv, "dual subdivision")
    add("balance", cmd_balance, "balancing report per vertex")
    add("degree", cmd_degree, "degree read from the rays")
    add("union", cmd_union, "union of two curves", ("poly1", "poly2"))
    add("intersect", cmd_intersect, "transverse intersection", ("poly1", "poly2"))
    add("stable", cmd_stable, "stable intersection", ("poly1", "poly2"))
    add("selfint", cmd_selfint, "stable self-intersection")
    add("bezout", cmd_bezout, "total stable intersection multiplicity", ("poly1", "poly2"))
    for name, fn, help in (("patchwork", cmd_patchwork, "build a real tropical curve"),
                           ("components", cmd_components, "arrangement of a real tropical curve")):
        sp = add(name, fn, help)
        sp.add_argument("--signs", help="one of +/- per triangulation vertex, sorted")
        sp.add_argument("--signs-file", help="JSON object {\"i,j\": 1 or -1}")
        sp.add_argument("--erasure", help="JSON object {edge id: [[d1, d2], [d1, d2]]}")
        if name == "components":
            sp.add_argument("--model", choices=MODELS + ("all",), default="plane")
    sp = add("harnack", cmd_harnack, "maximize plane components over sign distributions")
    sp.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    sp.add_argument("--budget", type=int)
    sp = add("amoeba", cmd_amoeba, "sample an amoeba and measure its distance to the curve")
    sp.add_argument("--t", type=float, default=10.0)
    sp.add_argument("--twists", help="JSON {\"i,j\": [re, im]} or @FILE; default all 1")
    sp.add_argument("--lo", type=float, default=Grid.lo)
    sp.add_argument("--hi", type=float, default=Grid.hi)
    sp.add_argument("--n-modulus", type=int, default=Grid.n_modulus)
    sp.add_argument("--n-arg", type=int, default=Grid.n_arg)
    sp.add_argument("--study", help="comma separated increasing bases for a convergence table")
    sp = sub.add_parser("dequant", parents=[common], help="quantized addition log_t(t^x + t^y)")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.add_argument("--t", type=float, default=10.0)
    sp.set_defaults(fn=cmd_dequant)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.fn(_Ctx(args), out)
    except AssertionError as exc:
        print(f"contract violation: {exc}", file=err)
        return 3
    except (ParseError, InputError, NonTransverse, UndefinedDegree, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
