"""Resolve every double point of the covering by a Hirzebruch-Jung string.

The result is the graph of the total transform of the companion function,
every vertex decorated by the multiplicity of its pullback.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Tuple

from .covering import CoveredEdge, CoveredGraph
from .curvegraph import CurveEdge, CurveGraph, CurveVertex, DivisorClass, Sign, edge_divisors, natural_key
from .numtheory import HJString, hj_string


class ResolutionError(ValueError):
    pass


@dataclass(frozen=True)
class StringChain:
    """The chain replacing one covered edge, read from ``start`` to ``end``.

    ``start`` is the copy of the second endpoint of the base edge and ``end``
    the copy of the first; ``string.mus[0]`` sits at ``start``.
    """

    origin: str
    sign: Sign
    string: HJString
    start: str
    end: str

    @property
    def interior(self) -> List[Tuple[int, int]]:
        """``(selfint_raw, mult)`` for each new curve, ``selfint_raw = -k_i``."""
        return [(-k, mu) for k, mu in zip(self.string.coeffs, self.string.interior_mus)]

    @property
    def end_mults(self) -> Tuple[int, int]:
        return self.string.mus[0], self.string.mus[-1]


@dataclass(frozen=True)
class MultVertex:
    id: str
    mult: int
    genus: int
    arrow: bool = False
    selfint_raw: Optional[int] = None  # -k_i on string interiors
    base: Optional[str] = None


@dataclass(frozen=True)
class MultEdge:
    u: str
    v: str
    sign: Sign


@dataclass
class MultGraph:
    name: str
    vertices: Dict[str, MultVertex] = field(default_factory=dict)
    edges: List[MultEdge] = field(default_factory=list)
    chains: Dict[str, StringChain] = field(default_factory=dict)

    def sorted_vertices(self) -> List[MultVertex]:
        return [self.vertices[k] for k in sorted(self.vertices, key=natural_key)]


def strict_transform_multiplicity(v: CurveVertex) -> int:
    m, n = v.pair
    return v.mf * n // gcd(v.mf, m)


def base_string(g: CurveGraph, e: CurveEdge) -> HJString:
    """The string for a double point of the base graph, oriented ``e.v -> e.u``."""
    d1, d2, d3 = edge_divisors(g, e)
    d = gcd(d1.m, d2.m, d3.m)
    if e.sign is Sign.PLUS:
        return hj_string(d2.m // d, d1.m // d, d3.m // d, 0, d1.n, d3.n)
    if d1.cls is DivisorClass.G:
        raise ResolutionError(f"{e.id}: unsupported: G-shared - edge")
    return hj_string(d1.m // d, d2.m // d, d3.m // d, d1.n, 0, 0)


def _reversed(s: HJString) -> HJString:
    # same curves read from the other end; alpha is no longer meaningful
    return HJString(s.a, s.c, s.b, s.n1, s.n3, s.n2, s.delta, s.alpha,
                    s.coeffs[::-1], s.mus[::-1])


def edge_string(cg: CoveredGraph, edge_id: str) -> StringChain:
    ce: CoveredEdge = cg.edges[edge_id]
    g = cg.base
    e = g.edges[ce.base]
    s = base_string(g, e)
    want = (strict_transform_multiplicity(g.vertices[e.v]),
            strict_transform_multiplicity(g.vertices[e.u]))
    if (s.mus[0], s.mus[-1]) != want and (s.mus[-1], s.mus[0]) == want:
        s = _reversed(s)
    return StringChain(ce.id, ce.sign, s, ce.v, ce.u)


def insert_strings(cg: CoveredGraph) -> MultGraph:
    mg = MultGraph(cg.base.name)
    for cv in cg.sorted_vertices():
        mult = strict_transform_multiplicity(cv.vertex)
        mg.vertices[cv.id] = MultVertex(cv.id, mult, cv.genus, cv.is_arrow, base=cv.base)
    for ce in cg.sorted_edges():
        chain = edge_string(cg, ce.id)
        first, last = chain.end_mults
        for vid, mu in ((chain.start, first), (chain.end, last)):
            if mg.vertices[vid].mult != mu:
                raise ResolutionError(
                    f"multiplicity mismatch on {ce.id}: string end has {mu}, "
                    f"{vid} has {mg.vertices[vid].mult}"
                )
        mg.chains[ce.id] = chain
        path = [chain.start]
        for i, (raw, mu) in enumerate(chain.interior, start=1):
            vid = f"{ce.id}:{i}"
            mg.vertices[vid] = MultVertex(vid, mu, 0, selfint_raw=raw)
            path.append(vid)
        path.append(chain.end)
        mg.edges.extend(MultEdge(a, b, ce.sign) for a, b in zip(path, path[1:]))
    return mg
