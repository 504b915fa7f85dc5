"""Combinatorial patchworking of tropical curves into real curve arrangements.

Quadrants are labelled ``(d1, d2)`` in {0,1}^2 where ``d1`` flips the sign of
x and ``d2`` the sign of y; the reflection ``sigma_{a,b}`` acts on labels by
XOR. An edge copy is kept in quadrant ``d`` when the signs at the two ends of
its dual edge, twisted by ``(-1)^(d.p)``, differ.

Arrangements are read in three models. The punctured plane uses only the
copies themselves; the plane glues ray copies that cross a coordinate axis;
the projective plane also glues the copies of ``(1, 1)`` rays through the line
at infinity.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

import networkx as nx

from .curve import TropicalCurve
from .geometry import point_in_polygon

Label = tuple[int, int]
QUADRANTS: tuple[Label, ...] = ((0, 0), (0, 1), (1, 0), (1, 1))
MODELS = ("punctured", "plane", "projective")
BOND_TAGS = {(-1, 0): "axis-x", (0, -1): "axis-y", (1, 1): "infinity"}


def xor(a: Label, b: Label) -> Label:
    return (a[0] ^ b[0], a[1] ^ b[1])


def reflect(point, label: Label):
    """``sigma_label``: negate x when ``label[0]`` is 1 and y when ``label[1]`` is 1."""
    return ((-1) ** label[0] * point[0], (-1) ** label[1] * point[1])


def parity(v) -> Label:
    return (v[0] % 2, v[1] % 2)


@dataclass(frozen=True)
class Violation:
    rule: str
    where: tuple
    detail: str


def validate_patchwork_input(curve: TropicalCurve) -> list[Violation]:
    """Empty list when every edge weight is odd and every dual cell a triangle."""
    out = []
    if curve.degree is None:
        out.append(Violation("newton", (), "Newton polygon is not a standard triangle"))
    for k, e in enumerate(curve.edges):
        if e.weight % 2 == 0:
            out.append(Violation("odd-weight", (k,), f"edge {k} has weight {e.weight}"))
    for k, cell in enumerate(curve.subdivision.cells):
        if len(cell) != 3:
            out.append(Violation("triangle", (k,), f"cell {k} has {len(cell)} vertices"))
    return out


def _adjacent_edges(curve: TropicalCurve) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in curve.vertices]
    for k, e in enumerate(curve.edges):
        adj[e.start].append(k)
        if e.end is not None:
            adj[e.end].append(k)
    return adj


def validate_erasure(curve: TropicalCurve, kept: Mapping[int, frozenset]) -> list[Violation]:
    """Check both erasure rules for an explicit choice of kept copies."""
    out = []
    for k, e in enumerate(curve.edges):
        labels = kept.get(k, frozenset())
        if len(labels) != 2:
            out.append(Violation("count", (k,), f"edge {k} keeps {len(labels)} copies"))
            continue
        a, b = sorted(labels)
        if xor(a, b) != parity(e.direction):
            out.append(
                Violation("rule1", (k,), f"edge {k} keeps {a},{b}; they differ by "
                          f"{xor(a, b)} not {parity(e.direction)}")
            )
    for v, edges in enumerate(_adjacent_edges(curve)):
        for q in QUADRANTS:
            erased = sum(1 for k in edges if q not in kept.get(k, ()))
            if erased not in (1, 3):
                out.append(Violation("rule2", (v, q), f"vertex {v} quadrant {q}: {erased} erased"))
    return out


def sign_vertices(curve: TropicalCurve) -> list[tuple[int, int]]:
    """Lattice vertices of the dual triangulation, sorted (the sign domain)."""
    return curve.subdivision.lattice_points


def from_signs(curve: TropicalCurve, signs: Mapping[tuple[int, int], int]) -> dict[int, frozenset]:
    """Erasure choice induced by a sign distribution on the triangulation."""
    domain = sign_vertices(curve)
    if set(signs) != set(domain):
        raise ValueError("signs must be given on exactly the triangulation vertices")
    kept = {}
    for k, e in enumerate(curve.edges):
        if e.weight % 2 == 0:
            raise ValueError(f"edge {k} has even weight {e.weight}")
        p, q = curve.subdivision.edges[e.dual].endpoints
        labels = []
        for d in QUADRANTS:
            sp = signs[p] * (-1) ** ((d[0] * p[0] + d[1] * p[1]) % 2)
            sq = signs[q] * (-1) ** ((d[0] * q[0] + d[1] * q[1]) % 2)
            if sp != sq:
                labels.append(d)
        kept[k] = frozenset(labels)
    return kept


@dataclass(frozen=True)
class Arc:
    edge: int
    quadrant: Label
    kind: str
    points: tuple  # reflected start (and end) point
    direction: tuple[int, int]  # reflected primitive direction


@dataclass(frozen=True)
class Joint:
    vertex: int
    quadrant: Label
    point: tuple
    degree: int


@dataclass(frozen=True)
class Bond:
    edge: int
    quadrants: tuple[Label, Label]
    tag: str


@dataclass
class RealTropicalCurve:
    curve: TropicalCurve = field(repr=False)
    kept: dict
    arcs: list[Arc]
    joints: list[Joint]
    bonds: list[Bond]


def build_real_curve(curve: TropicalCurve, kept: Mapping[int, frozenset]) -> RealTropicalCurve:
    arcs = []
    for k, e in enumerate(curve.edges):
        for d in sorted(kept[k]):
            start = reflect(curve.vertices[e.start], d)
            pts = (start,) if e.end is None else (start, reflect(curve.vertices[e.end], d))
            arcs.append(Arc(k, d, e.kind, pts, reflect(e.direction, d)))
    joints = []
    adj = _adjacent_edges(curve)
    for v, pt in enumerate(curve.vertices):
        for d in QUADRANTS:
            deg = sum(1 for k in adj[v] if d in kept[k])
            joints.append(Joint(v, d, reflect(pt, d), deg))
    bonds = []
    for k, e in enumerate(curve.edges):
        if e.kind == "ray":
            a, b = sorted(kept[k])
            bonds.append(Bond(k, (a, b), BOND_TAGS[e.direction]))
    return RealTropicalCurve(curve, dict(kept), arcs, joints, bonds)


@dataclass
class Arrangement:
    model: str
    components: int
    pseudolines: Optional[list[bool]] = None
    bounded: Optional[list[bool]] = None
    nesting: Optional[dict[int, Optional[int]]] = None
    members: list = field(default_factory=list, repr=False)

    @property
    def pseudoline_count(self) -> int:
        return sum(self.pseudolines or [])

    @property
    def unbounded(self) -> int:
        return sum(1 for b in self.bounded or [] if not b)


def _arc_graph(real: RealTropicalCurve, model: str) -> nx.MultiGraph:
    """Arcs as nodes; joints of degree 2 and model-selected bonds as links."""
    g = nx.MultiGraph()
    g.add_nodes_from((a.edge, a.quadrant) for a in real.arcs)
    adj = _adjacent_edges(real.curve)
    for j in real.joints:
        if j.degree == 2:
            u, w = [(k, j.quadrant) for k in adj[j.vertex] if j.quadrant in real.kept[k]]
            g.add_edge(u, w, kind="joint")
    allowed = {"punctured": (), "plane": ("axis-x", "axis-y"),
               "projective": ("axis-x", "axis-y", "infinity")}[model]
    for b in real.bonds:
        if b.tag in allowed:
            g.add_edge((b.edge, b.quadrants[0]), (b.edge, b.quadrants[1]), kind=b.tag)
    return g


def dual_point(real: RealTropicalCurve, arc: tuple[int, Label]):
    """Midpoint of the reflected dual edge; the arc's position in the
    symmetrized-triangulation picture of the real curve."""
    k, d = arc
    p, q = real.curve.subdivision.edges[real.curve.edges[k].dual].endpoints
    mid = (Fraction(p[0] + q[0], 2), Fraction(p[1] + q[1], 2))
    return reflect(mid, d)


def _cycle_order(g: nx.MultiGraph, nodes) -> list:
    sub = g.subgraph(nodes)
    start = min(nodes)
    order, prev, cur = [start], None, start
    used = set()
    while True:
        nxt = None
        for _, w, key in sub.edges(cur, keys=True):
            ek = (min(cur, w), max(cur, w), key)
            if ek not in used:
                used.add(ek)
                nxt = w
                break
        if nxt is None or nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def components(real: RealTropicalCurve, model: str = "plane") -> Arrangement:
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}")
    g = _arc_graph(real, model)
    comps = sorted(sorted(c) for c in nx.connected_components(g))
    arr = Arrangement(model, len(comps), members=comps)
    if model == "projective":
        flags = []
        for c in comps:
            sub = g.subgraph(c)
            if any(deg != 2 for _, deg in sub.degree()):
                raise AssertionError("projective component is not a circuit")
            inf = sum(1 for *_, kind in sub.edges(data="kind") if kind == "infinity")
            flags.append(inf % 2 == 1)
        arr.pseudolines = flags
    if model == "plane":
        inf_rays = {k for k, e in enumerate(real.curve.edges)
                    if e.kind == "ray" and e.direction == (1, 1)}
        arr.bounded = [all(k not in inf_rays for k, _ in c) for c in comps]
        arr.nesting = _nesting(real, g, comps, arr.bounded)
    return arr


def _nesting(real, g, comps, bounded) -> dict[int, Optional[int]]:
    polys = {}
    for i, c in enumerate(comps):
        if bounded[i]:
            ring = []
            for arc in _cycle_order(g, c):
                pt = dual_point(real, arc)
                if not ring or ring[-1] != pt:
                    ring.append(pt)
            if len(ring) > 1 and ring[0] == ring[-1]:
                ring.pop()
            polys[i] = ring
    parent: dict[int, Optional[int]] = {}
    for i, ring in polys.items():
        outer = [j for j, other in polys.items() if j != i and point_in_polygon(ring[0], other)]
        # the immediate parent is the enclosing component nested deepest
        parent[i] = max(outer, key=lambda j: sum(
            1 for m, o in polys.items() if m != j and point_in_polygon(polys[j][0], o)
        )) if outer else None
    return parent


def all_sign_vectors(domain):
    for bits in itertools.product((1, -1), repeat=len(domain)):
        yield dict(zip(domain, bits))


@dataclass
class HarnackResult:
    best: int
    witness: dict
    arrangement: Arrangement
    evaluated: int
    complete: bool


def harnack_search(
    curve: TropicalCurve,
    mode: str = "exhaustive",
    budget: Optional[int] = None,
    seed: Optional[int] = None,
) -> HarnackResult:
    """Maximize the plane-model component count over sign distributions.

    Ties keep the lexicographically smallest witness (``+1`` before ``-1``).
    """
    problems = validate_patchwork_input(curve)
    if problems:
        raise ValueError(f"curve cannot be patchworked: {problems[0].detail}")
    domain = sign_vertices(curve)
    if mode == "exhaustive":
        if len(domain) > 20:
            raise ValueError(f"exhaustive search over 2^{len(domain)} signs is too large")
        candidates = all_sign_vectors(domain)
    elif mode == "random":
        rng = random.Random(seed)
        candidates = ({p: rng.choice((1, -1)) for p in domain} for _ in itertools.count())
        if budget is None:
            raise ValueError("random mode needs a budget")
    else:
        raise ValueError(f"unknown mode {mode!r}")

    best = None
    evaluated = 0
    complete = True
    for signs in candidates:
        if budget is not None and evaluated >= budget:
            complete = mode == "exhaustive" and evaluated == 2 ** len(domain)
            break
        arr = components(build_real_curve(curve, from_signs(curve, signs)), "plane")
        evaluated += 1
        key = (arr.components, tuple(signs[p] for p in domain))
        if best is None or key > best[0]:
            best = (key, signs, arr)
    if mode == "random":
        complete = False
    return HarnackResult(best[2].components, best[1], best[2], evaluated, complete)


def harnack_bound(d: int) -> int:
    return (d * (d - 1) + 2) // 2
