"""Plumbing graphs: self-intersections, intersection matrices and sign moves."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .curvegraph import Sign, natural_key
from .resolution import MultGraph


class SelfIntersectionError(ValueError):
    def __init__(self, vertex: str, total: int, mult: int):
        super().__init__(
            f"non-integral self-intersection at {vertex}: {mult} does not divide {total}"
        )
        self.vertex = vertex


@dataclass(frozen=True)
class PlumbVertex:
    id: str
    euler: int
    genus: int = 0


@dataclass(frozen=True)
class PlumbEdge:
    u: str
    v: str
    sign: Sign = Sign.PLUS

    def key(self):
        a, b = sorted((self.u, self.v), key=natural_key)
        return natural_key(a), natural_key(b), self.sign.value


@dataclass
class PlumbGraph:
    vertices: Dict[str, PlumbVertex] = field(default_factory=dict)
    edges: List[PlumbEdge] = field(default_factory=list)

    def order(self) -> List[str]:
        return sorted(self.vertices, key=natural_key)

    def sorted_edges(self) -> List[PlumbEdge]:
        return sorted(self.edges, key=PlumbEdge.key)

    def minus_count(self) -> int:
        return sum(e.sign is Sign.MINUS for e in self.edges)

    def __eq__(self, other):
        if not isinstance(other, PlumbGraph):
            return NotImplemented
        keys = sorted(e.key() for e in self.edges)
        return self.vertices == other.vertices and keys == sorted(e.key() for e in other.edges)


def compute_self_intersections(mg: MultGraph) -> PlumbGraph:
    """Euler numbers from ``mult(v)*e_v + sum(eps * mult(w)) = 0``, arrowheads dropped."""
    signed = defaultdict(int)
    for e in mg.edges:
        signed[e.u] += e.sign.eps * mg.vertices[e.v].mult
        signed[e.v] += e.sign.eps * mg.vertices[e.u].mult
    pg = PlumbGraph()
    for v in mg.sorted_vertices():
        if v.arrow:
            continue
        if v.mult < 1:
            raise ValueError(f"{v.id}: multiplicity must be >= 1, got {v.mult}")
        total = signed[v.id]
        if total % v.mult:
            raise SelfIntersectionError(v.id, total, v.mult)
        pg.vertices[v.id] = PlumbVertex(v.id, -total // v.mult, v.genus)
    pg.edges = [
        PlumbEdge(e.u, e.v, e.sign)
        for e in mg.edges
        if e.u in pg.vertices and e.v in pg.vertices
    ]
    return pg


# --------------------------------------------------------------------------
# integer linear algebra


@dataclass(frozen=True)
class IntersectionMatrix:
    order: Tuple[str, ...]
    rows: Tuple[Tuple[int, ...], ...]

    def as_lists(self) -> List[List[int]]:
        return [list(r) for r in self.rows]


def intersection_matrix(pg: PlumbGraph) -> IntersectionMatrix:
    order = pg.order()
    pos = {vid: i for i, vid in enumerate(order)}
    mat = [[0] * len(order) for _ in order]
    for vid, i in pos.items():
        mat[i][i] = pg.vertices[vid].euler
    for e in pg.edges:
        i, j = pos[e.u], pos[e.v]
        if i == j:
            raise ValueError(f"loop at {e.u} is not supported")
        mat[i][j] += e.sign.eps
        mat[j][i] += e.sign.eps
    return IntersectionMatrix(tuple(order), tuple(tuple(r) for r in mat))


def determinant(mat: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in mat]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_diagonal(mat: Sequence[Sequence[int]]) -> List[int]:
    """Diagonal of the Smith normal form: ``d1 | d2 | ...``, nonnegative, zeros last."""
    a = [list(r) for r in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            # clear column t and row t; restart with a smaller pivot on any remainder
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
            rest = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            rest += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            if rest:
                _, i, j = min(rest)
                a[t], a[i] = a[i], a[t]
                for r in a:
                    r[t], r[j] = r[j], r[t]
                continue
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            # enforce divisibility: fold the offending row into row t
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag + [0] * (min(rows, cols) - len(diag))


@dataclass(frozen=True)
class HomologyInvariants:
    determinant: int
    invariant_factors: Tuple[int, ...]
    corank: int
    genus_rank: int  # 2 * sum of genera
    cycle_rank: int  # independent cycles of the graph

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def cycle_rank(pg: PlumbGraph) -> int:
    parent = {v: v for v in pg.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = len(parent)
    for e in pg.edges:
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    return len(pg.edges) - len(pg.vertices) + components


def homology_invariants(pg: PlumbGraph) -> HomologyInvariants:
    rows = intersection_matrix(pg).rows
    snf = smith_diagonal(rows)
    return HomologyInvariants(
        determinant=determinant(rows),
        invariant_factors=tuple(snf),
        corank=sum(d == 0 for d in snf),
        genus_rank=2 * sum(v.genus for v in pg.vertices.values()),
        cycle_rank=cycle_rank(pg),
    )


# --------------------------------------------------------------------------
# orientation move R0


def r0_flip(pg: PlumbGraph, vid: str) -> PlumbGraph:
    """Reverse the orientation of one surface: toggles the signs of its edges."""
    if vid not in pg.vertices:
        raise KeyError(f"unknown vertex {vid!r}")
    edges = [
        replace(e, sign=e.sign.flipped()) if (e.u == vid) != (e.v == vid) else e
        for e in pg.edges
    ]
    return PlumbGraph(dict(pg.vertices), edges)


def canonicalize_signs(pg: PlumbGraph) -> PlumbGraph:
    """Apply R0 moves to cut down the number of minus edges.

    Spanning-forest edges are made plus first (which already clears every
    minus edge on a tree), then single flips are applied while they help.
    """
    adj = defaultdict(list)
    for e in pg.edges:
        adj[e.u].append(e)
        adj[e.v].append(e)
    flip: Dict[str, bool] = {}
    for root in pg.order():
        if root in flip:
            continue
        flip[root] = False
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for e in sorted(adj[x], key=PlumbEdge.key):
                y = e.v if e.u == x else e.u
                if y not in flip:
                    flip[y] = flip[x] ^ (e.sign is Sign.MINUS)
                    queue.append(y)

    def apply(edges):
        return [
            replace(e, sign=e.sign.flipped()) if flip[e.u] != flip[e.v] else e
            for e in edges
        ]

    improved = True
    while improved:
        improved = False
        for vid in pg.order():
            gain = 0
            for e in adj[vid]:
                if e.u == e.v:
                    continue
                now_minus = (e.sign is Sign.MINUS) != (flip[e.u] != flip[e.v])
                gain += 1 if now_minus else -1
            if gain > 0:
                flip[vid] = not flip[vid]
                improved = True
    return PlumbGraph(dict(pg.vertices), apply(pg.edges))
