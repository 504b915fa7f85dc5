"""Amoebas of complex curves and their distance to the tropical limit.

The complex family attached to a tropical polynomial ``max(a_ij + i X + j Y)``
and nonzero twists ``alpha_ij`` is ``P_t = sum alpha_ij t^(a_ij) x^i y^j``;
under ``Log_t`` its amoeba tends to the tropical curve as ``t`` grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from .curve import TropicalCurve, TropPoly2, corner_locus


class SamplingError(RuntimeError):
    """Too many fibers failed to converge."""


@dataclass(frozen=True)
class ComplexCurveSpec:
    tropical: TropPoly2
    twists: Mapping[tuple[int, int], complex]
    base: float

    def __post_init__(self):
        if not self.base > 1:
            raise ValueError(f"base must satisfy t > 1, got {self.base}")
        if set(self.twists) != set(self.tropical.coeffs):
            raise ValueError("twists must be given on exactly the support")
        if any(a == 0 for a in self.twists.values()):
            raise ValueError("twists must be nonzero")


@dataclass(frozen=True)
class Grid:
    """Fiber sampling: ``log_t|x|`` uniform on ``[lo, hi]``, arguments uniform on
    the circle (``n_arg`` points, starting at 0)."""

    lo: float = -4.0
    hi: float = 4.0
    n_modulus: int = 101
    n_arg: int = 100


@dataclass
class AmoebaSample:
    points: np.ndarray  # shape (n, 2)
    grid: Grid
    fibers: int
    skipped: int
    max_residual: float = field(default=0.0)


def unit_twists(p: TropPoly2) -> dict:
    return {e: 1.0 for e in p.coeffs}


def aberth_roots(coeffs: np.ndarray, rng: np.random.Generator, maxiter: int = 200, tol: float = 1e-14):
    """All roots of a batch of polynomials by Aberth-Ehrlich iteration.

    ``coeffs`` has shape (batch, n+1), highest degree first, leading entries
    nonzero. Returns (roots, converged) with roots of shape (batch, n).
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    batch, n1 = coeffs.shape
    n = n1 - 1
    monic = coeffs / coeffs[:, :1]
    # Fujiwara bound on the root moduli sets the initial circle
    radius = 2 * np.max(np.abs(monic[:, 1:]) ** (1 / np.arange(1, n1)), axis=1)
    phase = rng.uniform(0, 2 * np.pi, size=(batch, 1)) + 2 * np.pi * np.arange(n) / n
    z = radius[:, None] * np.exp(1j * phase)
    dcoeffs = monic[:, :-1] * np.arange(n, 0, -1)
    active = np.ones(batch, dtype=bool)
    for _ in range(maxiter):
        if not active.any():
            break
        za = z[active]
        p = _horner(monic[active], za)
        dp = _horner(dcoeffs[active], za)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            diff = za[:, :, None] - za[:, None, :]
            np.einsum("bii->bi", diff)[...] = np.inf
            s = np.sum(1.0 / diff, axis=2)
            step = ratio / (1 - ratio * s)
        step = np.where(np.isfinite(step), step, 0)
        z[active] = za - step
        small = np.all(np.abs(step) <= tol * np.maximum(np.abs(za), 1e-300), axis=1)
        idx = np.flatnonzero(active)
        active[idx[small]] = False
    return z, ~active


def _horner(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    out = np.zeros_like(z)
    for k in range(c.shape[1]):
        out = out * z + c[:, k:k + 1]
    return out


def _fiber_coefficients(spec: ComplexCurveSpec, x: np.ndarray) -> np.ndarray:
    """Coefficients in y (highest first) of ``P_t(x, y)`` for each sampled x."""
    t = spec.base
    deg_y = max(j for _, j in spec.tropical.coeffs)
    out = np.zeros((len(x), deg_y + 1), dtype=complex)
    for (i, j), a in spec.tropical.coeffs.items():
        out[:, deg_y - j] += spec.twists[(i, j)] * t ** float(a) * x ** i
    return out


def relative_residual(spec: ComplexCurveSpec, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """``|P_t(x, y)| / sum |monomial|``."""
    t = spec.base
    total = np.zeros(np.broadcast(x, y).shape, dtype=complex)
    scale = np.zeros(total.shape)
    for (i, j), a in spec.tropical.coeffs.items():
        m = spec.twists[(i, j)] * t ** float(a) * x ** i * y ** j
        total += m
        scale += np.abs(m)
    return np.abs(total) / scale


def amoeba_sample(
    spec: ComplexCurveSpec,
    grid: Grid = Grid(),
    tol: float = 1e-10,
    seed: Optional[int] = 0,
    max_skip_fraction: float = 0.01,
) -> AmoebaSample:
    """Log_t images of certified points of ``P_t = 0`` over a grid of x fibers."""
    t = spec.base
    deg_y = max(j for _, j in spec.tropical.coeffs)
    if deg_y < 1:
        raise ValueError("the curve has no y-dependence; nothing to solve in fibers")
    mods = np.linspace(grid.lo, grid.hi, grid.n_modulus)
    args = 2 * np.pi * np.arange(grid.n_arg) / grid.n_arg
    xs = (t ** mods[:, None] * np.exp(1j * args[None, :])).ravel()
    coeffs = _fiber_coefficients(spec, xs)
    lead_ok = np.abs(coeffs[:, 0]) > 0
    rng = np.random.default_rng(seed)
    roots = np.full((len(xs), deg_y), np.nan, dtype=complex)
    conv = np.zeros(len(xs), dtype=bool)
    if lead_ok.any():
        r, c = aberth_roots(coeffs[lead_ok], rng)
        roots[lead_ok], conv[lead_ok] = r, c
    xx = np.repeat(xs[:, None], deg_y, axis=1)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        res = relative_residual(spec, xx, roots)
    good_fiber = conv & np.all(res <= tol, axis=1)
    skipped = int(np.count_nonzero(~good_fiber))
    if skipped > max_skip_fraction * len(xs):
        raise SamplingError(f"{skipped} of {len(xs)} fibers failed to converge")
    keep = good_fiber[:, None] & (np.abs(roots) > 0)
    log_t = math.log(t)
    px = np.log(np.abs(xx[keep])) / log_t
    py = np.log(np.abs(roots[keep])) / log_t
    pts = np.column_stack([px, py])
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    max_res = float(np.max(res[keep])) if keep.any() else 0.0
    return AmoebaSample(pts[order], grid, len(xs), skipped, max_res)


def _segment_features(curve: TropicalCurve):
    feats = []
    for e in curve.edges:
        base = tuple(float(c) for c in curve.edge_base(e))
        d = np.array(e.direction, dtype=float)
        if e.kind == "segment":
            end = tuple(float(c) for c in curve.vertices[e.end])
            feats.append((np.array(base), np.array(end) - np.array(base), 0.0, 1.0))
        elif e.kind == "ray":
            feats.append((np.array(base), d, 0.0, np.inf))
        else:
            feats.append((np.array(base), d, -np.inf, np.inf))
    return feats


def distances_to_curve(points: np.ndarray, curve: TropicalCurve) -> np.ndarray:
    """Euclidean distance from each point to the nearest edge of ``curve``."""
    if curve.is_empty:
        raise ValueError("distance to an empty curve is undefined")
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    best = np.full(len(pts), np.inf)
    for base, d, lo, hi in _segment_features(curve):
        s = np.clip((pts - base) @ d / (d @ d), lo, hi)
        near = base + s[:, None] * d
        best = np.minimum(best, np.hypot(*(pts - near).T))
    return best


def dist_to_curve(sample, curve: TropicalCurve) -> float:
    """One-sided Hausdorff distance from a sample (or point array) to ``curve``."""
    pts = sample.points if isinstance(sample, AmoebaSample) else sample
    if len(pts) == 0:
        return 0.0
    return float(np.max(distances_to_curve(pts, curve)))


@dataclass
class ConvergenceTable:
    rows: list[tuple[float, float]]
    slope: float
    intercept: float
    residual: float
    monotone: bool


def convergence_study(
    tropical: TropPoly2,
    twists: Optional[Mapping] = None,
    t_list: Sequence[float] = (10.0, 100.0, 1000.0),
    grid: Grid = Grid(),
    seed: Optional[int] = 0,
) -> ConvergenceTable:
    """Distance from the base-t amoeba to the tropical curve for each t.

    Fits ``distance ~ slope / ln t + intercept`` by least squares.
    """
    ts = list(t_list)
    if any(b <= a for a, b in zip(ts, ts[1:])) or any(t <= 1 for t in ts):
        raise ValueError("t_list must be increasing with every t > 1")
    twists = unit_twists(tropical) if twists is None else twists
    curve = corner_locus(tropical)
    rows = []
    for t in ts:
        sample = amoeba_sample(ComplexCurveSpec(tropical, twists, t), grid, seed=seed)
        rows.append((t, dist_to_curve(sample, curve)))
    inv = np.array([1 / math.log(t) for t, _ in rows])
    dist = np.array([d for _, d in rows])
    if len(rows) >= 2:
        (slope, intercept), res, *_ = np.polyfit(inv, dist, 1, full=True)
        residual = float(res[0]) if len(res) else 0.0
    else:
        slope, intercept, residual = float("nan"), float("nan"), float("nan")
    monotone = all(b < a for a, b in zip(dist, dist[1:]))
    return ConvergenceTable(rows, float(slope), float(intercept), residual, monotone)
