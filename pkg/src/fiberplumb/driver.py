"""End-to-end driver: curve graph -> covering -> strings -> plumbing graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .covering import CoveredGraph, UnrealizableError, build_covering
from .curvegraph import CurveGraph, KConstraint, ValidationReport, min_k, validate
from .formats import ParseError, emit_graph, parse_curve_graph
from .numtheory import StringError
from .plumbing import PlumbGraph, SelfIntersectionError, compute_self_intersections
from .resolution import MultGraph, ResolutionError, insert_strings

STAGES = ("validate", "cover", "mult", "plumb")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNREALIZABLE = 2


class PipelineError(Exception):
    def __init__(self, stage: str, message: str, code: int):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.code = code


@dataclass
class PipelineResult:
    curve: CurveGraph
    report: ValidationReport
    k: Optional[int] = None
    k_constraints: List[KConstraint] = field(default_factory=list)
    covered: Optional[CoveredGraph] = None
    mult: Optional[MultGraph] = None
    plumb: Optional[PlumbGraph] = None

    def graph(self, stage: str):
        return {"validate": self.curve, "cover": self.covered,
                "mult": self.mult, "plumb": self.plumb}[stage]


def run(g: CurveGraph, stop_after: str = "plumb") -> PipelineResult:
    """Run the stages up to ``stop_after``; raises :class:`PipelineError`."""
    if stop_after not in STAGES:
        raise ValueError(f"unknown stage {stop_after!r}")
    report = validate(g)
    if not report.ok:
        msg = "; ".join(i.format(g.lines) for i in report.errors)
        raise PipelineError("validate", msg, EXIT_INVALID)
    res = PipelineResult(g, report)
    res.k, res.k_constraints = min_k(g)
    if stop_after == "validate":
        return res
    try:
        res.covered = build_covering(g)
    except UnrealizableError as exc:
        raise PipelineError("cover", str(exc), EXIT_UNREALIZABLE) from exc
    if stop_after == "cover":
        return res
    try:
        res.mult = insert_strings(res.covered)
    except (StringError, ResolutionError) as exc:
        raise PipelineError("mult", str(exc), EXIT_UNREALIZABLE) from exc
    if stop_after == "mult":
        return res
    try:
        res.plumb = compute_self_intersections(res.mult)
    except SelfIntersectionError as exc:
        raise PipelineError("plumb", str(exc), EXIT_UNREALIZABLE) from exc
    return res


def pipeline(text: str, stop_after: str = "plumb", fmt: str = "native"):
    """Text in, ``(output, diagnostics, exit_code)`` out."""
    try:
        g = parse_curve_graph(text)
    except ParseError as exc:
        return "", f"[parse] {exc}", EXIT_INVALID
    try:
        res = run(g, stop_after)
    except PipelineError as exc:
        return "", str(exc), exc.code
    notes = "\n".join(i.format(g.lines) for i in res.report.warnings)
    return emit_graph(res.graph(stop_after), fmt), notes, EXIT_OK
