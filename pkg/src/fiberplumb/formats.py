"""Line-based text formats and DOT export.

Curve graphs::

    graph <name> [s0=<p>/<q>]
    vertex <id> type=node m=<int> pair=<int>,<int> genus=<int> [switches=<int>{,<int>}]
    vertex <id> type=arrow m=<int>
    edge <id> <v1> <v2> sign=<+|-> [count=<int>] [attach=<int>,<int>]

Plumbing graphs::

    pvertex <id> euler=<int> genus=<int>
    pedge <v1> <v2> sign=<+|->

``#`` starts a comment. Intermediate graphs (covering, multiplicities) have
write-only record types ``cvertex``/``cedge`` and ``mvertex``/``medge``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

from .covering import CoveredGraph
from .curvegraph import CurveEdge, CurveGraph, CurveVertex, Kind, Sign, natural_key
from .plumbing import PlumbEdge, PlumbGraph, PlumbVertex
from .resolution import MultGraph

CURVE_ID = re.compile(r"[A-Za-z0-9_]+\Z")
PLUMB_ID = re.compile(r"[A-Za-z0-9_.:]+\Z")
INT = re.compile(r"[+-]?\d+\Z")


class ParseError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


class _Line:
    """Tokens of one record with their 1-based columns."""

    def __init__(self, lineno: int, text: str):
        self.lineno = lineno
        self.tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]

    def error(self, col: int, msg: str) -> ParseError:
        return ParseError(self.lineno, col, msg)

    def positional(self, idx: int, what: str, pattern=CURVE_ID) -> str:
        if idx >= len(self.tokens) or "=" in self.tokens[idx][0]:
            col = self.tokens[idx][1] if idx < len(self.tokens) else self.tokens[-1][1]
            raise self.error(col, f"expected {what}")
        tok, col = self.tokens[idx]
        if not pattern.match(tok):
            raise self.error(col, f"malformed {what} {tok!r}")
        return tok

    def options(self, start: int, allowed) -> Dict[str, Tuple[str, int]]:
        out = {}
        for tok, col in self.tokens[start:]:
            key, eq, val = tok.partition("=")
            if not eq:
                raise self.error(col, f"expected key=value, got {tok!r}")
            if key not in allowed:
                raise self.error(col, f"unknown key {key!r}")
            if key in out:
                raise self.error(col, f"repeated key {key!r}")
            out[key] = (val, col + len(key) + 1)
        return out

    def integer(self, opts, key: str, default=None) -> int:
        if key not in opts:
            if default is None:
                raise self.error(self.tokens[0][1], f"missing {key}=")
            return default
        val, col = opts[key]
        if not INT.match(val):
            raise self.error(col, f"malformed integer {val!r}")
        return int(val)

    def int_list(self, opts, key: str, length: Optional[int] = None, default=None) -> Tuple[int, ...]:
        if key not in opts:
            if default is None:
                raise self.error(self.tokens[0][1], f"missing {key}=")
            return default
        val, col = opts[key]
        parts = val.split(",")
        for p in parts:
            if not INT.match(p):
                raise self.error(col, f"malformed integer {p!r}")
        if length is not None and len(parts) != length:
            raise self.error(col, f"{key}= needs {length} integers")
        return tuple(int(p) for p in parts)


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield _Line(lineno, body)


def _parse_s0(line: _Line, val: str, col: int) -> Fraction:
    m = re.fullmatch(r"(\d+)/(\d+)", val)
    if not m or int(m.group(2)) == 0:
        raise line.error(col, f"malformed s0 {val!r}, expected p/q")
    return Fraction(int(m.group(1)), int(m.group(2)))


def parse_curve_graph(text: str) -> CurveGraph:
    g: Optional[CurveGraph] = None
    for line in _records(text):
        head, col = line.tokens[0]
        if head == "graph":
            if g is not None:
                raise line.error(col, "repeated graph header")
            name = line.positional(1, "graph name")
            opts = line.options(2, {"s0"})
            g = CurveGraph(name)
            if "s0" in opts:
                g.s0 = _parse_s0(line, *opts["s0"])
            continue
        if head.startswith("s0="):
            if g is None or g.vertices or g.edges:
                raise line.error(col, "s0= belongs to the header")
            if g.s0 is not None:
                raise line.error(col, "repeated s0")
            opts = line.options(0, {"s0"})
            g.s0 = _parse_s0(line, *opts["s0"])
            continue
        if g is None:
            raise line.error(col, "expected 'graph <name>' header first")
        if head == "vertex":
            vid = line.positional(1, "vertex id")
            opts = line.options(2, {"type", "m", "pair", "genus", "switches"})
            if "type" not in opts:
                raise line.error(col, "missing type=")
            kind, tcol = opts["type"]
            if kind == "node":
                v = CurveVertex(
                    vid, Kind.NODE, line.integer(opts, "m"),
                    line.int_list(opts, "pair", 2),
                    line.integer(opts, "genus"),
                    line.int_list(opts, "switches", default=()),
                )
            elif kind == "arrow":
                for key in ("pair", "genus", "switches"):
                    if key in opts:
                        raise line.error(opts[key][1], f"{key}= not allowed on arrowheads")
                v = CurveVertex(vid, Kind.ARROW, line.integer(opts, "m"))
            else:
                raise line.error(tcol, f"unknown vertex type {kind!r}")
            if vid in g.vertices or vid in g.edges:
                raise line.error(line.tokens[1][1], f"duplicate id {vid!r}")
            g.add_vertex(v)
        elif head == "edge":
            eid = line.positional(1, "edge id")
            ends = []
            for idx in (2, 3):
                ref = line.positional(idx, "vertex reference")
                if ref not in g.vertices:
                    raise line.error(line.tokens[idx][1], f"unknown vertex {ref!r}")
                ends.append(ref)
            opts = line.options(4, {"sign", "count", "attach"})
            if "sign" not in opts:
                raise line.error(col, "missing sign=")
            sval, scol = opts["sign"]
            if sval not in ("+", "-"):
                raise line.error(scol, f"sign must be + or -, got {sval!r}")
            if eid in g.vertices or eid in g.edges:
                raise line.error(line.tokens[1][1], f"duplicate id {eid!r}")
            g.add_edge(CurveEdge(
                eid, ends[0], ends[1], Sign(sval),
                line.integer(opts, "count", 1),
                line.int_list(opts, "attach", 2, (0, 0)),
            ))
        else:
            raise line.error(col, f"unknown record {head!r}")
        g.lines[line.tokens[1][0]] = line.lineno
    if g is None:
        raise ParseError(1, 1, "empty document")
    return g


def parse_plumb_graph(text: str) -> PlumbGraph:
    pg = PlumbGraph()
    for line in _records(text):
        head, col = line.tokens[0]
        if head == "graph":
            continue
        if head == "pvertex":
            vid = line.positional(1, "vertex id", PLUMB_ID)
            opts = line.options(2, {"euler", "genus"})
            if vid in pg.vertices:
                raise line.error(line.tokens[1][1], f"duplicate id {vid!r}")
            pg.vertices[vid] = PlumbVertex(vid, line.integer(opts, "euler"), line.integer(opts, "genus"))
        elif head == "pedge":
            ends = []
            for idx in (1, 2):
                ref = line.positional(idx, "vertex reference", PLUMB_ID)
                if ref not in pg.vertices:
                    raise line.error(line.tokens[idx][1], f"unknown vertex {ref!r}")
                ends.append(ref)
            if ends[0] == ends[1]:
                raise line.error(line.tokens[2][1], "loops are not supported")
            opts = line.options(3, {"sign"})
            if "sign" not in opts:
                raise line.error(col, "missing sign=")
            sval, scol = opts["sign"]
            if sval not in ("+", "-"):
                raise line.error(scol, f"sign must be + or -, got {sval!r}")
            pg.edges.append(PlumbEdge(ends[0], ends[1], Sign(sval)))
        else:
            raise line.error(col, f"unknown record {head!r}")
    return pg


# --------------------------------------------------------------------------
# native emitters


def _ints(xs) -> str:
    return ",".join(str(x) for x in xs)


def emit_curve_graph(g: CurveGraph) -> str:
    head = f"graph {g.name}"
    if g.s0 is not None:
        head += f" s0={g.s0.numerator}/{g.s0.denominator}"
    out = [head]
    for v in g.sorted_vertices():
        if v.is_arrow:
            out.append(f"vertex {v.id} type=arrow m={v.mf}")
            continue
        rec = f"vertex {v.id} type=node m={v.mf} pair={_ints(v.pair)} genus={v.genus}"
        if v.switches:
            rec += f" switches={_ints(v.switches)}"
        out.append(rec)
    for e in g.sorted_edges():
        rec = f"edge {e.id} {e.u} {e.v} sign={e.sign.value}"
        if e.count != 1:
            rec += f" count={e.count}"
        if e.attach != (0, 0):
            rec += f" attach={_ints(e.attach)}"
        out.append(rec)
    return "\n".join(out) + "\n"


def emit_covered_graph(cg: CoveredGraph) -> str:
    out = [f"graph {cg.base.name}"]
    for cv in cg.sorted_vertices():
        v = cv.vertex
        rec = f"cvertex {cv.id} base={cv.base} index={cv.index} type={v.kind.value} m={v.mf}"
        if not cv.is_arrow:
            rec += f" pair={_ints(v.pair)} euler={cv.euler}"
        out.append(rec)
    for ce in cg.sorted_edges():
        out.append(f"cedge {ce.id} {ce.u} {ce.v} sign={ce.sign.value} base={ce.base}")
    return "\n".join(out) + "\n"


def emit_mult_graph(mg: MultGraph) -> str:
    out = [f"graph {mg.name}"]
    for v in mg.sorted_vertices():
        rec = f"mvertex {v.id} mult={v.mult} genus={v.genus}"
        if v.arrow:
            rec += " arrow"
        out.append(rec)
    for e in sorted(mg.edges, key=lambda e: (natural_key(e.u), natural_key(e.v))):
        out.append(f"medge {e.u} {e.v} sign={e.sign.value}")
    return "\n".join(out) + "\n"


def emit_plumb_graph(pg: PlumbGraph) -> str:
    out = [f"pvertex {vid} euler={pg.vertices[vid].euler} genus={pg.vertices[vid].genus}"
           for vid in pg.order()]
    for e in pg.sorted_edges():
        a, b = sorted((e.u, e.v), key=natural_key)
        out.append(f"pedge {a} {b} sign={e.sign.value}")
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# DOT


def _dot(name: str, nodes: List[Tuple[str, str, str]], edges: List[Tuple[str, str, Sign]]) -> str:
    out = [f'graph "{name}" {{']
    for vid, label, shape in nodes:
        out.append(f'  "{vid}" [label="{label}", shape={shape}];')
    for u, v, sign in edges:
        style = "dashed" if sign is Sign.MINUS else "solid"
        out.append(f'  "{u}" -- "{v}" [label="{sign.value}", style={style}];')
    out.append("}")
    return "\n".join(out) + "\n"


def to_dot(graph: Union[CurveGraph, CoveredGraph, MultGraph, PlumbGraph], name: str = "G") -> str:
    if isinstance(graph, PlumbGraph):
        nodes = [(vid, f"{pv.euler} [{pv.genus}]", "circle")
                 for vid, pv in ((v, graph.vertices[v]) for v in graph.order())]
        edges = [(e.u, e.v, e.sign) for e in graph.sorted_edges()]
        return _dot(name, nodes, edges)
    if isinstance(graph, MultGraph):
        nodes = [(v.id, f"({v.mult}) [{v.genus}]", "plaintext" if v.arrow else "circle")
                 for v in graph.sorted_vertices()]
        return _dot(graph.name, nodes, [(e.u, e.v, e.sign) for e in graph.edges])
    if isinstance(graph, CoveredGraph):
        nodes = [(cv.id, cv.vertex.triple() + ("" if cv.is_arrow else f" [chi={cv.euler}]"),
                  "plaintext" if cv.is_arrow else "circle")
                 for cv in graph.sorted_vertices()]
        return _dot(graph.base.name, nodes, [(e.u, e.v, e.sign) for e in graph.sorted_edges()])
    nodes = [(v.id, v.triple() + ("" if v.is_arrow else f" [{v.genus}]"),
              "plaintext" if v.is_arrow else "circle")
             for v in graph.sorted_vertices()]
    edges = [(e.u, e.v, e.sign) for e in graph.sorted_edges() for _ in range(e.count)]
    return _dot(graph.name, nodes, edges)


def emit_graph(graph, fmt: str = "native") -> str:
    if fmt == "dot":
        return to_dot(graph)
    emitters: Dict[type, Callable] = {
        CurveGraph: emit_curve_graph,
        CoveredGraph: emit_covered_graph,
        MultGraph: emit_mult_graph,
        PlumbGraph: emit_plumb_graph,
    }
    return emitters[type(graph)](graph)
