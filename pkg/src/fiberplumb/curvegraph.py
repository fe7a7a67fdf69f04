"""The decorated curve-configuration graph and its consistency checks.

A vertex stands for a curve ``C`` lying on two divisors: one component of the
``f``-divisor (multiplicity ``mf``) and one divisor carrying the pair
``(m, n)`` of multiplicities of ``f`` and of the companion function ``g``.
Nodes are compact curves (pair over the origin, ``n >= 1``); arrowheads are
non-compact curves on the strict transform of ``V(g)`` (pair ``(0, 1)``).

Edges record only a sign, a repetition count and covering attachment offsets.
The three divisors meeting at the double point are derived from the two
endpoint decorations and the sign.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterator, List, Optional, Tuple


class Sign(str, enum.Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def eps(self) -> int:
        return 1 if self is Sign.PLUS else -1

    def flipped(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS


class Kind(str, enum.Enum):
    NODE = "node"
    ARROW = "arrow"


class DivisorClass(str, enum.Enum):
    F = "F"  # component of the f-divisor
    O = "O"  # over the origin
    G = "G"  # strict transform of V(g)


@dataclass(frozen=True)
class DivisorMult:
    m: int
    n: int
    cls: DivisorClass

    def problems(self) -> List[str]:
        if self.cls is DivisorClass.F and not (self.n == 0 and self.m >= 1):
            return [f"F-divisor needs n=0 and m>=1, got ({self.m},{self.n})"]
        if self.cls is DivisorClass.O and not (self.m >= 1 and self.n >= 1):
            return [f"O-divisor needs m>=1 and n>=1, got ({self.m},{self.n})"]
        if self.cls is DivisorClass.G and (self.m, self.n) != (0, 1):
            return [f"G-divisor needs (m,n)=(0,1), got ({self.m},{self.n})"]
        return []


def natural_key(s: str):
    """Sort key that orders ``a.2`` before ``a.10``."""
    return [(0, int(t), "") if t.isdigit() else (1, 0, t) for t in re.split(r"(\d+)", s)]


@dataclass(frozen=True)
class CurveVertex:
    id: str
    kind: Kind
    mf: int
    pair: Tuple[int, int] = (0, 1)
    genus: int = 0
    switches: Tuple[int, ...] = ()

    @property
    def is_arrow(self) -> bool:
        return self.kind is Kind.ARROW

    @property
    def second(self) -> DivisorMult:
        cls = DivisorClass.G if self.is_arrow else DivisorClass.O
        return DivisorMult(self.pair[0], self.pair[1], cls)

    @property
    def first(self) -> DivisorMult:
        return DivisorMult(self.mf, 0, DivisorClass.F)

    def triple(self) -> str:
        return f"({self.mf};{self.pair[0]},{self.pair[1]})"


@dataclass(frozen=True)
class CurveEdge:
    id: str
    u: str
    v: str
    sign: Sign
    count: int = 1
    attach: Tuple[int, int] = (0, 0)

    def other(self, vid: str) -> str:
        if vid == self.u:
            return self.v
        if vid == self.v:
            return self.u
        raise KeyError(f"{vid} is not an endpoint of edge {self.id}")


@dataclass
class CurveGraph:
    name: str
    vertices: Dict[str, CurveVertex] = field(default_factory=dict)
    edges: Dict[str, CurveEdge] = field(default_factory=dict)
    s0: Optional[Fraction] = None
    # id -> 1-based source line, filled in by the parser for diagnostics
    lines: Dict[str, int] = field(default_factory=dict, compare=False, repr=False)

    def add_vertex(self, v: CurveVertex) -> None:
        if v.id in self.vertices or v.id in self.edges:
            raise ValueError(f"duplicate id {v.id!r}")
        self.vertices[v.id] = v

    def add_edge(self, e: CurveEdge) -> None:
        if e.id in self.edges or e.id in self.vertices:
            raise ValueError(f"duplicate id {e.id!r}")
        for end in (e.u, e.v):
            if end not in self.vertices:
                raise KeyError(f"edge {e.id} refers to unknown vertex {end!r}")
        self.edges[e.id] = e

    def incident(self, vid: str) -> List[CurveEdge]:
        return [e for e in self.edges.values() if vid in (e.u, e.v)]

    def sorted_vertices(self) -> List[CurveVertex]:
        return [self.vertices[k] for k in sorted(self.vertices, key=natural_key)]

    def sorted_edges(self) -> List[CurveEdge]:
        return [self.edges[k] for k in sorted(self.edges, key=natural_key)]


def third_divisor(g: CurveGraph, e: CurveEdge, vid: str) -> DivisorMult:
    """The divisor through the double point ``e`` that does not contain ``vid``."""
    other = g.vertices[e.other(vid)]
    if e.sign is Sign.PLUS:
        return other.second
    return other.first


def edge_divisors(g: CurveGraph, e: CurveEdge) -> Tuple[DivisorMult, DivisorMult, DivisorMult]:
    """``(D1, D2, D3)`` at the double point, with ``D1`` in O or G and ``D2`` in F.

    For a plus edge ``D2`` is the shared f-divisor and ``D1``, ``D3`` are the
    pairs of ``e.u`` and ``e.v``. For a minus edge ``D1`` is the shared pair and
    ``D2``, ``D3`` are the f-divisors of ``e.u`` and ``e.v``.
    """
    u, v = g.vertices[e.u], g.vertices[e.v]
    if e.sign is Sign.PLUS:
        return u.second, u.first, v.second
    return u.second, u.first, v.first


def edge_gcd(g: CurveGraph, e: CurveEdge) -> int:
    d1, d2, d3 = edge_divisors(g, e)
    return gcd(d1.m, d2.m, d3.m)


# --------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Issue:
    severity: str  # "error" | "warning"
    where: str
    message: str

    def format(self, lines: Optional[Dict[str, int]] = None) -> str:
        loc = f"line {lines[self.where]}: " if lines and self.where in lines else ""
        return f"{loc}{self.severity}: {self.where}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    issues: Tuple[Issue, ...]

    @property
    def errors(self) -> List[Issue]:
        return [i for i in self.issues if i.severity == "error"]

    @property
    def warnings(self) -> List[Issue]:
        return [i for i in self.issues if i.severity == "warning"]

    @property
    def ok(self) -> bool:
        return not self.errors

    def __iter__(self) -> Iterator[Issue]:
        return iter(self.issues)

    def __len__(self) -> int:
        return len(self.issues)


def _vertex_issues(v: CurveVertex) -> Iterator[Issue]:
    def err(msg):
        return Issue("error", v.id, msg)

    if v.mf < 1:
        yield err(f"m must be >= 1, got {v.mf}")
    if v.genus < 0:
        yield err(f"genus must be >= 0, got {v.genus}")
    for p in v.second.problems():
        yield err(p)
    if v.is_arrow:
        if v.genus:
            yield err("arrowheads have genus 0")
        if v.switches:
            yield err("arrowheads carry no switches")
    elif len(v.switches) != 2 * v.genus:
        yield err(f"expected {2 * v.genus} switches for genus {v.genus}, got {len(v.switches)}")


def _edge_issues(g: CurveGraph, e: CurveEdge) -> Iterator[Issue]:
    def err(msg):
        return Issue("error", e.id, msg)

    if e.u == e.v:
        yield err("loops are not allowed")
        return
    if e.u not in g.vertices or e.v not in g.vertices:
        yield err("unknown endpoint")
        return
    if e.count < 1:
        yield err(f"count must be >= 1, got {e.count}")
    u, v = g.vertices[e.u], g.vertices[e.v]
    if e.sign is Sign.PLUS:
        if u.mf != v.mf:
            yield err(f"+ endpoints must share m ({u.mf} != {v.mf})")
        for end in (u, v):
            third = third_divisor(g, e, end.id)
            if third.n == 0:
                yield err(f"+ edge needs n != 0 on the third divisor at {end.id}")
    else:
        if u.pair != v.pair or u.kind is not v.kind:
            yield err(f"- endpoints must share pair ({u.pair} != {v.pair})")
        elif u.is_arrow:
            yield Issue("warning", e.id, "- edge with shared divisor on V(g) is unsupported")


def validate(g: CurveGraph) -> ValidationReport:
    """Collect every violated invariant of ``g``; an empty report means valid."""
    issues: List[Issue] = []
    for v in g.sorted_vertices():
        issues.extend(_vertex_issues(v))
    for e in g.sorted_edges():
        issues.extend(_edge_issues(g, e))
    if g.s0 is not None and g.s0 < 0:
        issues.append(Issue("error", g.name, f"s0 must be nonnegative, got {g.s0}"))
    return ValidationReport(tuple(issues))


def star(g: CurveGraph, vid: str) -> CurveGraph:
    """``vid``, its neighbours, and the edges joining ``vid`` to them."""
    if vid not in g.vertices:
        raise KeyError(f"unknown vertex {vid!r}")
    sub = CurveGraph(f"star_{vid}", s0=g.s0)
    sub.add_vertex(g.vertices[vid])
    edges = g.incident(vid)
    for e in edges:
        w = e.other(vid)
        if w not in sub.vertices:
            sub.add_vertex(g.vertices[w])
    for e in edges:
        sub.add_edge(e)
    return sub


# --------------------------------------------------------------------------
# choice of k


@dataclass(frozen=True)
class KConstraint:
    """One condition on ``k``.

    ``kind`` is ``"even"``, ``"kn>m"`` (uses ``m``, ``n``), ``"2mF|kn"``
    (uses ``m`` as the f-multiplicity and ``n``) or ``"k>s0"``.
    """

    kind: str
    witness: str
    m: int = 0
    n: int = 0
    bound: Optional[Fraction] = None

    def holds(self, k: int) -> bool:
        if self.kind == "even":
            return k > 0 and k % 2 == 0
        if self.kind == "kn>m":
            return k * self.n > self.m
        if self.kind == "2mF|kn":
            return (k * self.n) % (2 * self.m) == 0
        if self.kind == "k>s0":
            return k > self.bound
        raise ValueError(self.kind)

    def describe(self) -> str:
        if self.kind == "kn>m":
            return f"k*{self.n} > {self.m}  [{self.witness}]"
        if self.kind == "2mF|kn":
            return f"2*{self.m} | k*{self.n}  [{self.witness}]"
        if self.kind == "k>s0":
            return f"k > {self.bound}  [{self.witness}]"
        return "k even"


def k_constraints(g: CurveGraph) -> List[KConstraint]:
    out = [KConstraint("even", "k")]
    for v in g.sorted_vertices():
        if v.is_arrow:
            continue
        m, n = v.pair
        out.append(KConstraint("kn>m", f"vertex {v.id}", m, n))
        out.append(KConstraint("2mF|kn", f"vertex {v.id}", v.mf, n))
    for e in g.sorted_edges():
        if e.sign is not Sign.PLUS:
            continue
        for end in (e.u, e.v):
            third = third_divisor(g, e, end)
            if third.cls is not DivisorClass.O:
                continue
            where = f"edge {e.id} at {end}"
            out.append(KConstraint("kn>m", where, third.m, third.n))
            out.append(KConstraint("2mF|kn", where, g.vertices[end].mf, third.n))
    if g.s0 is not None:
        out.append(KConstraint("k>s0", "s0", bound=g.s0))
    return out


def min_k(g: CurveGraph) -> Tuple[int, List[KConstraint]]:
    """Smallest even ``k`` meeting every constraint, with the constraint list."""
    constraints = k_constraints(g)
    step = 2
    lower = Fraction(0)
    for c in constraints:
        if c.kind == "2mF|kn":
            step = lcm(step, 2 * c.m // gcd(2 * c.m, c.n))
        elif c.kind == "kn>m":
            lower = max(lower, Fraction(c.m, c.n))
        elif c.kind == "k>s0":
            lower = max(lower, c.bound)
    k = (lower // step + 1) * step
    return int(k), constraints
