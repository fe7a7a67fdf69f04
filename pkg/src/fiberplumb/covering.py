"""Cyclic covering of the curve graph.

Each curve ``C`` splits into ``n_C`` surfaces, each double point into ``d_e``
points. The covering is determined up to isomorphism once one lift of every
base edge is pinned down; the ``attach`` offsets of an edge say which copies
its lift number 0 joins, and lift ``j`` then joins the copies shifted by ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Dict, List, Optional

from .curvegraph import CurveEdge, CurveGraph, CurveVertex, Sign, edge_gcd, natural_key, third_divisor


class UnrealizableError(ValueError):
    """The decorations cannot come from a genuine curve configuration."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


@dataclass(frozen=True)
class CoveredVertex:
    id: str
    base: str
    index: int
    euler: Optional[int]  # None for arrowheads
    vertex: CurveVertex

    @property
    def is_arrow(self) -> bool:
        return self.vertex.is_arrow

    @property
    def genus(self) -> int:
        return 0 if self.euler is None else 1 - self.euler // 2


@dataclass(frozen=True)
class CoveredEdge:
    id: str
    base: str
    rep: int  # which of the ``count`` parallel base edges
    index: int
    u: str
    v: str
    sign: Sign


@dataclass
class CoveredGraph:
    base: CurveGraph
    vertices: Dict[str, CoveredVertex] = field(default_factory=dict)
    edges: Dict[str, CoveredEdge] = field(default_factory=dict)
    fiber: Dict[str, int] = field(default_factory=dict)
    edge_fiber: Dict[str, int] = field(default_factory=dict)

    def copy_id(self, vid: str, i: int) -> str:
        return f"{vid}.{i % self.fiber[vid]}"

    def sorted_vertices(self) -> List[CoveredVertex]:
        return [self.vertices[k] for k in sorted(self.vertices, key=natural_key)]

    def sorted_edges(self) -> List[CoveredEdge]:
        return [self.edges[k] for k in sorted(self.edges, key=natural_key)]


def component_count(g: CurveGraph, vid: str) -> int:
    """Number ``n_C`` of surfaces over the curve ``vid``."""
    v = g.vertices[vid]
    n = gcd(v.mf, v.pair[0], *v.switches)
    for e in g.incident(vid):
        n = gcd(n, third_divisor(g, e, vid).m)
    return n


def edge_fiber_count(g: CurveGraph, e: CurveEdge) -> int:
    """Number ``d_e`` of points over the double point ``e``."""
    return edge_gcd(g, e)


def euler_char(g: CurveGraph, vid: str) -> int:
    """Common Euler characteristic of the surfaces over the node ``vid``.

    Riemann-Hurwitz for the map onto the curve: a generic point has
    ``gcd(mf, m)`` preimages and the double point ``e`` has ``d_e``.
    """
    v = g.vertices[vid]
    if v.is_arrow:
        raise ValueError(f"{vid} is an arrowhead")
    incident = g.incident(vid)
    valence = sum(e.count for e in incident)
    total = (2 - 2 * v.genus - valence) * gcd(v.mf, v.pair[0])
    total += sum(e.count * edge_fiber_count(g, e) for e in incident)
    n = component_count(g, vid)
    if total % n:
        raise UnrealizableError(vid, f"n_C={n} does not divide n_C*chi={total}")
    chi = total // n
    if chi % 2 or chi > 2:
        raise UnrealizableError(vid, f"Euler characteristic {chi} is odd or exceeds 2")
    return chi


def build_covering(g: CurveGraph) -> CoveredGraph:
    cg = CoveredGraph(g)
    for v in g.sorted_vertices():
        n = component_count(g, v.id)
        chi = None if v.is_arrow else euler_char(g, v.id)
        cg.fiber[v.id] = n
        for i in range(n):
            cv = CoveredVertex(f"{v.id}.{i}", v.id, i, chi, v)
            cg.vertices[cv.id] = cv
    for e in g.sorted_edges():
        d = edge_fiber_count(g, e)
        nu, nv = cg.fiber[e.u], cg.fiber[e.v]
        if d % lcm(nu, nv):
            raise UnrealizableError(e.id, f"d_e={d} is not a multiple of lcm({nu},{nv})")
        cg.edge_fiber[e.id] = d
        a, b = e.attach
        for r in range(e.count):
            for j in range(d):
                ce = CoveredEdge(
                    f"{e.id}.{r}.{j}", e.id, r, j,
                    cg.copy_id(e.u, a + j), cg.copy_id(e.v, b + j), e.sign,
                )
                cg.edges[ce.id] = ce
    return cg


def shift(cg: CoveredGraph, steps: int = 1):
    """The generator of the cyclic action, as id maps on vertices and edges."""
    vmap = {cv.id: cg.copy_id(cv.base, cv.index + steps) for cv in cg.vertices.values()}
    emap = {}
    for ce in cg.edges.values():
        d = cg.edge_fiber[ce.base]
        emap[ce.id] = f"{ce.base}.{ce.rep}.{(ce.index + steps) % d}"
    return vmap, emap


def equivariance_violations(cg: CoveredGraph) -> List[str]:
    """Edges whose image under the action does not join the images of its ends."""
    vmap, emap = shift(cg)
    bad = []
    for ce in cg.edges.values():
        img = cg.edges.get(emap[ce.id])
        if img is None or (img.u, img.v) != (vmap[ce.u], vmap[ce.v]):
            bad.append(ce.id)
    return bad


def riemann_hurwitz_total(cg: CoveredGraph, vid: str) -> int:
    """``n_C * chi`` recounted from the covering itself.

    Uses the number of covered edges actually landing on the copies of
    ``vid`` instead of the ``d_e`` values.
    """
    g = cg.base
    v = g.vertices[vid]
    valence = sum(e.count for e in g.incident(vid))
    copies = {cv.id for cv in cg.vertices.values() if cv.base == vid}
    lifted = sum((ce.u in copies) + (ce.v in copies) for ce in cg.edges.values())
    return (2 - 2 * v.genus - valence) * gcd(v.mf, v.pair[0]) + lifted
