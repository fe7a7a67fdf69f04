"""Independent oracles and random generators shared by the test modules."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import reduce
from math import gcd
from pathlib import Path

from fiberplumb.covering import UnrealizableError, build_covering
from fiberplumb.curvegraph import CurveEdge, CurveGraph, CurveVertex, Kind, Sign, validate
from fiberplumb.plumbing import PlumbEdge, PlumbGraph, PlumbVertex

FIXTURES = Path(__file__).parent / "fixtures"


# ---------------------------------------------------------------- oracles


def eval_ncf_convergents(coeffs):
    """k1 - 1/(k2 - ...) via the 2x2 matrix product [[k,-1],[1,0]]."""
    p, q, p_prev, q_prev = 1, 0, 0, -1
    for k in coeffs:
        p, p_prev = k * p - p_prev, p
        q, q_prev = k * q - q_prev, q
    return Fraction(p, q)


def det_leibniz(mat):
    n = len(mat)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= mat[i][j]
            if term == 0:
                break
        total += term
    return total


def det_fraction(mat):
    """Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    assert det.denominator == 1
    return int(det)


def invariant_factors_by_minors(mat):
    """Smith diagonal from determinantal divisors d_k = gcd of k x k minors."""
    n = len(mat)
    divisors = [1]
    for k in range(1, n + 1):
        g = 0
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, det_leibniz([[mat[r][c] for c in cols] for r in rows]))
        divisors.append(g)
    out = []
    for k in range(1, n + 1):
        out.append(0 if divisors[k] == 0 else divisors[k] // divisors[k - 1])
    return out


def chain_matrix(eulers, signs):
    n = len(eulers)
    mat = [[0] * n for _ in range(n)]
    for i, e in enumerate(eulers):
        mat[i][i] = e
    for i, s in enumerate(signs):
        mat[i][i + 1] = mat[i + 1][i] = s
    return mat


def gcd_all(xs):
    return reduce(gcd, xs, 0)


# ------------------------------------------------------------- generators


def random_plumb_graph(rng: random.Random, max_vertices=7, tree=False) -> PlumbGraph:
    n = rng.randint(1, max_vertices)
    pg = PlumbGraph()
    for i in range(n):
        pg.vertices[f"v{i}"] = PlumbVertex(f"v{i}", rng.randint(-5, 5), rng.randint(0, 2))
    if tree:
        pairs = [(rng.randrange(i), i) for i in range(1, n)]
    else:
        pairs = []
        if n > 1:
            for _ in range(rng.randint(0, 2 * n)):
                pairs.append(tuple(rng.sample(range(n), 2)))
    for a, b in pairs:
        pg.edges.append(PlumbEdge(f"v{a}", f"v{b}", rng.choice([Sign.PLUS, Sign.MINUS])))
    return pg


def random_curve_graph(rng: random.Random, name="fuzz") -> CurveGraph:
    """A random graph satisfying the sign-consistency rules (not necessarily realizable)."""
    g = CurveGraph(name)
    mfs = [1, 2, 3, 4, 6]
    pairs = [(1, 1), (2, 1), (3, 1), (4, 1), (6, 1), (4, 2), (6, 2), (9, 3), (12, 1)]
    for i in range(rng.randint(1, 6)):
        genus = rng.choice([0, 0, 0, 1, 2])
        switches = tuple(rng.randrange(0, 7) for _ in range(2 * genus))
        g.add_vertex(CurveVertex(f"n{i}", Kind.NODE, rng.choice(mfs), rng.choice(pairs), genus, switches))
    nodes = list(g.vertices.values())
    for i in range(rng.randint(0, 3)):
        anchor = rng.choice(nodes)
        g.add_vertex(CurveVertex(f"h{i}", Kind.ARROW, anchor.mf))
        g.add_edge(CurveEdge(f"a{i}", anchor.id, f"h{i}", Sign.PLUS, rng.randint(1, 2),
                             (rng.randrange(4), rng.randrange(4))))
    for j in range(rng.randint(0, 8)):
        u, v = rng.sample(nodes, 2) if len(nodes) > 1 else (None, None)
        if u is None:
            break
        if u.pair == v.pair:
            sign = Sign.MINUS
        elif u.mf == v.mf:
            sign = Sign.PLUS
        else:
            continue
        g.add_edge(CurveEdge(f"e{j}", u.id, v.id, sign, rng.randint(1, 2),
                             (rng.randrange(5), rng.randrange(5))))
    return g


def realizable_curve_graphs(seed: int, count: int, max_tries: int = 100000):
    """``count`` random graphs that validate and admit a covering."""
    rng = random.Random(seed)
    out = []
    for t in range(max_tries):
        g = random_curve_graph(rng, f"fuzz{t}")
        if not validate(g).ok:
            continue
        try:
            build_covering(g)
        except UnrealizableError:
            continue
        out.append(g)
        if len(out) == count:
            return out
    raise RuntimeError(f"only {len(out)} realizable graphs after {max_tries} tries")


def hj_inputs(rng: random.Random, max_a=60):
    """Random coprime (a, b, c) with pipeline-shaped (n1, n2, n3)."""
    while True:
        a = rng.randint(1, max_a)
        b = rng.randint(0, 3 * max_a)
        c = rng.randint(0, 3 * max_a)
        if gcd(a, b, c) != 1:
            continue
        if rng.random() < 0.5:
            ns = (0, rng.randint(1, 5), rng.randint(1, 5))  # plus point
        else:
            if b == 0 or c == 0:
                continue
            ns = (rng.randint(1, 5), 0, 0)  # minus point
        return (a, b, c) + ns
