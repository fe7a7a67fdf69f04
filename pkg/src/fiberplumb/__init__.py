"""Plumbing graphs for boundaries of Milnor fibers of non-isolated surface singularities."""

from .covering import CoveredGraph, UnrealizableError, build_covering, component_count, edge_fiber_count, euler_char
from .curvegraph import CurveEdge, CurveGraph, CurveVertex, Kind, Sign, min_k, star, validate
from .formats import ParseError, emit_graph, parse_curve_graph, parse_plumb_graph, to_dot
from .numtheory import HJString, NegContFrac, StringError, eval_ncf, hj_string, neg_cont_frac
from .driver import PipelineError, pipeline, run
from .plumbing import (
    PlumbEdge,
    PlumbGraph,
    PlumbVertex,
    SelfIntersectionError,
    canonicalize_signs,
    compute_self_intersections,
    homology_invariants,
    intersection_matrix,
    r0_flip,
)
from .resolution import MultGraph, StringChain, edge_string, insert_strings, strict_transform_multiplicity

__version__ = "0.1.0"
