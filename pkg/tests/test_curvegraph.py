import random
from fractions import Fraction

import pytest

from fiberplumb.curvegraph import (
    CurveEdge,
    CurveGraph,
    CurveVertex,
    DivisorClass,
    Kind,
    Sign,
    min_k,
    star,
    third_divisor,
    validate,
)

from helpers import random_curve_graph


def node(vid, mf, m, n, genus=0, switches=()):
    return CurveVertex(vid, Kind.NODE, mf, (m, n), genus, switches)


def graph(vertices, edges=(), s0=None):
    g = CurveGraph("t", s0=s0)
    for v in vertices:
        g.add_vertex(v)
    for e in edges:
        g.add_edge(e)
    return g


def test_single_node_is_valid():
    assert validate(graph([node("a", 2, 3, 1)])).ok


def test_plus_edge_needs_common_mf():
    g = graph([node("a", 2, 3, 1), node("b", 3, 0, 1)], [CurveEdge("e", "a", "b", Sign.PLUS)])
    report = validate(g)
    assert not report.ok
    assert any("must share m" in i.message for i in report.errors)


def test_minus_edge_with_shared_pair_is_valid():
    g = graph([node("a", 2, 3, 1), node("b", 5, 3, 1)], [CurveEdge("e", "a", "b", Sign.MINUS)])
    assert validate(g).ok
    assert third_divisor(g, g.edges["e"], "a").m == 5
    assert third_divisor(g, g.edges["e"], "a").cls is DivisorClass.F


def test_minus_edge_between_arrowheads_only_warns():
    h1 = CurveVertex("h1", Kind.ARROW, 2)
    h2 = CurveVertex("h2", Kind.ARROW, 3)
    report = validate(graph([h1, h2], [CurveEdge("e", "h1", "h2", Sign.MINUS)]))
    assert report.ok
    assert len(report.warnings) == 1


@pytest.mark.parametrize(
    "vertex, fragment",
    [
        (node("a", 0, 3, 1), "m must be"),
        (node("a", 2, 3, 0), "O-divisor"),
        (node("a", 2, 3, 1, genus=1), "switches"),
        (CurveVertex("h", Kind.ARROW, 2, genus=1), "genus 0"),
    ],
)
def test_vertex_invariants(vertex, fragment):
    report = validate(graph([vertex]))
    assert any(fragment in i.message for i in report.errors)


def test_loop_rejected():
    g = graph([node("a", 2, 3, 1)])
    g.edges["e"] = CurveEdge("e", "a", "a", Sign.PLUS)
    assert not validate(g).ok


def test_duplicate_and_unknown_ids():
    g = graph([node("a", 2, 3, 1)])
    with pytest.raises(ValueError):
        g.add_vertex(node("a", 1, 1, 1))
    with pytest.raises(KeyError):
        g.add_edge(CurveEdge("e", "a", "zz", Sign.PLUS))


def test_validate_is_idempotent_and_pure():
    rng = random.Random(3)
    for _ in range(50):
        g = random_curve_graph(rng)
        before = repr(g)
        assert validate(g) == validate(g)
        assert repr(g) == before


def test_third_divisors_are_well_formed():
    rng = random.Random(5)
    for _ in range(200):
        g = random_curve_graph(rng)
        if not validate(g).ok:
            continue
        for e in g.edges.values():
            for end in (e.u, e.v):
                assert third_divisor(g, e, end).problems() == []


def test_star():
    g = graph(
        [node("u", 1, 2, 1), node("v", 1, 3, 1), node("w", 1, 4, 1), node("x", 1, 5, 1)],
        [
            CurveEdge("uv", "u", "v", Sign.PLUS),
            CurveEdge("vw", "v", "w", Sign.PLUS, count=2),
            CurveEdge("uw", "u", "w", Sign.PLUS),
        ],
    )
    s = star(g, "v")
    assert set(s.vertices) == {"u", "v", "w"}
    assert set(s.edges) == {"uv", "vw"}
    assert sum(e.count for e in s.edges.values() if {e.u, e.v} == {"v", "w"}) == 2
    assert set(star(g, "x").vertices) == {"x"}
    with pytest.raises(KeyError):
        star(g, "nope")


def _brute_k(g, limit=10_000):
    _, constraints = min_k(g)
    return next(k for k in range(1, limit) if all(c.holds(k) for c in constraints))


@pytest.mark.parametrize(
    "g, expected",
    [
        (graph([node("a", 2, 3, 1)]), 4),
        (graph([node("a", 1, 1, 1)]), 2),
        (graph([node("a", 2, 3, 1)], s0=Fraction(13, 3)), 8),
    ],
)
def test_min_k_examples(g, expected):
    k, constraints = min_k(g)
    assert k == expected == _brute_k(g)
    assert all(c.holds(k) for c in constraints)


def test_min_k_is_minimal_on_random_graphs():
    rng = random.Random(11)
    for _ in range(200):
        g = random_curve_graph(rng)
        if rng.random() < 0.3:
            g.s0 = Fraction(rng.randint(0, 60), rng.randint(1, 7))
        if not validate(g).ok:
            continue
        k, constraints = min_k(g)
        assert k == _brute_k(g)
        assert k % 2 == 0
        assert not all(c.holds(k - 2) for c in constraints)
