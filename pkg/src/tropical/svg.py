"""Plain SVG 1.1 rendering of curves, subdivisions, real curves and amoebas.

Output is a deterministic function of the input: coordinates are written
with fixed precision and elements in canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .amoeba import AmoebaSample
from .curve import DualSubdivision, TropicalCurve
from .geometry import orient
from .patchwork import QUADRANTS, RealTropicalCurve, reflect, sign_vertices


@dataclass(frozen=True)
class RenderConfig:
    ray_length: float = 2.0
    margin: float = 1.0
    stroke: float = 0.04
    label_threshold: int = 2
    scale: float = 40.0

    def __post_init__(self):
        if self.ray_length <= 0:
            raise ValueError("ray truncation length must be positive")


def _f(x) -> str:
    return f"{float(x):.4f}"


class _Canvas:
    """Collects primitives in world coordinates, flips y on output."""

    def __init__(self, cfg: RenderConfig):
        self.cfg = cfg
        self.items: list[tuple] = []
        self.xs: list[float] = []
        self.ys: list[float] = []

    def _track(self, *pts):
        for x, y in pts:
            self.xs.append(float(x))
            self.ys.append(float(y))

    def line(self, a, b, color="black", width=None):
        self._track(a, b)
        self.items.append(("line", a, b, color, width or self.cfg.stroke))

    def dot(self, p, r=0.06, color="black"):
        self._track(p)
        self.items.append(("dot", p, r, color))

    def text(self, p, s, color="black"):
        self._track(p)
        self.items.append(("text", p, s, color))

    def render(self) -> bytes:
        m = self.cfg.margin
        if not self.xs:
            self.xs, self.ys = [0.0], [0.0]
        x0, x1 = min(self.xs) - m, max(self.xs) + m
        y0, y1 = min(self.ys) - m, max(self.ys) + m
        k = self.cfg.scale
        w, h = (x1 - x0) * k, (y1 - y0) * k

        def tx(p):
            return _f((float(p[0]) - x0) * k), _f((y1 - float(p[1])) * k)

        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(w)}" '
            f'height="{_f(h)}" viewBox="0 0 {_f(w)} {_f(h)}">',
        ]
        for it in self.items:
            if it[0] == "line":
                (ax, ay), (bx, by) = tx(it[1]), tx(it[2])
                out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" '
                           f'stroke="{it[3]}" stroke-width="{_f(it[4] * k)}"/>')
            elif it[0] == "dot":
                cx, cy = tx(it[1])
                out.append(f'<circle cx="{cx}" cy="{cy}" r="{_f(it[2] * k)}" fill="{it[3]}"/>')
            else:
                cx, cy = tx(it[1])
                out.append(f'<text x="{cx}" y="{cy}" font-size="{_f(0.4 * k)}" '
                           f'fill="{it[3]}" class="weight">{it[2]}</text>')
        out.append("</svg>")
        return ("\n".join(out) + "\n").encode("utf-8")


def _ray_end(base, direction, length):
    d = np.array(direction, dtype=float)
    d = d / np.hypot(*d)
    return (float(base[0]) + length * d[0], float(base[1]) + length * d[1])


def _curve_items(canvas: _Canvas, curve: TropicalCurve, color="black", negate=False):
    cfg = canvas.cfg
    sgn = -1 if negate else 1
    for e in curve.edges:
        direction = (sgn * e.direction[0], sgn * e.direction[1])
        if e.kind == "segment":
            a, b = curve.vertices[e.start], curve.vertices[e.end]
            a, b = (sgn * a[0], sgn * a[1]), (sgn * b[0], sgn * b[1])
        elif e.kind == "ray":
            v = curve.vertices[e.start]
            a = (sgn * v[0], sgn * v[1])
            b = _ray_end(a, direction, cfg.ray_length)
        else:
            c = (sgn * e.anchor[0], sgn * e.anchor[1])
            a = _ray_end(c, (-direction[0], -direction[1]), cfg.ray_length)
            b = _ray_end(c, direction, cfg.ray_length)
        canvas.line(a, b, color, cfg.stroke * (1 + 0.5 * (e.weight - 1)))
        if e.weight >= cfg.label_threshold:
            mid = ((float(a[0]) + float(b[0])) / 2, (float(a[1]) + float(b[1])) / 2)
            off = np.array((-direction[1], direction[0]), dtype=float)
            off = 0.25 * off / np.hypot(*off)
            canvas.text((mid[0] + off[0], mid[1] + off[1]), str(e.weight), color)
    for v in curve.vertices:
        canvas.dot((sgn * v[0], sgn * v[1]), 0.05, color)


def curve_svg(curve: TropicalCurve, cfg: RenderConfig = RenderConfig(), negate=False) -> bytes:
    canvas = _Canvas(cfg)
    _curve_items(canvas, curve, negate=negate)
    return canvas.render()


def subdivision_svg(sub: DualSubdivision, cfg: RenderConfig = RenderConfig()) -> bytes:
    canvas = _Canvas(cfg)
    xs = [p[0] for p in sub.newton]
    ys = [p[1] for p in sub.newton]
    for e in sub.edges:
        canvas.line(*e.endpoints, "black" if e.boundary else "gray")
    poly = sub.newton
    for i in range(min(xs), max(xs) + 1):
        for j in range(min(ys), max(ys) + 1):
            if len(poly) < 3 or all(
                orient(poly[k], poly[(k + 1) % len(poly)], (i, j)) >= 0 for k in range(len(poly))
            ):
                canvas.dot((i, j), 0.05)
    return canvas.render()


def real_curve_svg(real: RealTropicalCurve, cfg: RenderConfig = RenderConfig()) -> bytes:
    """Four-quadrant picture on the symmetrized triangulation.

    Each kept arc is drawn inside the reflected dual triangle of its vertex,
    joining the midpoints of the two sign-changing edges.
    """
    canvas = _Canvas(cfg)
    curve = real.curve
    sub = curve.subdivision
    for d in QUADRANTS:
        for e in sub.edges:
            a, b = (reflect(p, d) for p in e.endpoints)
            canvas.line(a, b, "lightgray", cfg.stroke / 2)
    for j in real.joints:
        if j.degree != 2:
            continue
        mids = []
        for k, e in enumerate(curve.edges):
            if j.vertex in (e.start, e.end) and j.quadrant in real.kept[k]:
                p, q = sub.edges[e.dual].endpoints
                mids.append(reflect((Fraction(p[0] + q[0], 2), Fraction(p[1] + q[1], 2)), j.quadrant))
        canvas.line(mids[0], mids[1], "blue")
    for p in sign_vertices(curve):
        for d in QUADRANTS:
            canvas.dot(reflect(p, d), 0.04, "gray")
    return canvas.render()


def amoeba_svg(sample: AmoebaSample, curve: TropicalCurve = None, cfg: RenderConfig = RenderConfig()) -> bytes:
    canvas = _Canvas(cfg)
    for x, y in np.asarray(sample.points):
        canvas.dot((round(float(x), 6), round(float(y), 6)), 0.02, "green")
    if curve is not None:
        _curve_items(canvas, curve, "red")
    return canvas.render()


def emit_svg(obj, cfg: RenderConfig = RenderConfig(), negate=False) -> bytes:
    if isinstance(obj, TropicalCurve):
        return curve_svg(obj, cfg, negate)
    if isinstance(obj, DualSubdivision):
        return subdivision_svg(obj, cfg)
    if isinstance(obj, RealTropicalCurve):
        return real_curve_svg(obj, cfg)
    if isinstance(obj, AmoebaSample):
        return amoeba_svg(obj, None, cfg)
    raise TypeError(f"no SVG rendering for {type(obj).__name__}")
