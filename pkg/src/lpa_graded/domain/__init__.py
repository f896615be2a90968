"""Graph data model and structural predicates."""

from .graph import Edge, Graph, Path, Cycle, VertexSet, VertexKind, VertexProfile
from .structure import (
    CycleRecord,
    DirectednessResult,
    classify_vertices,
    closure_trace,
    cycles_pairwise_disjoint,
    graphs_isomorphic,
    hereditary_saturated_closure,
    hsat_subsets_bruteforce,
    is_downward_directed,
    is_hereditary,
    is_saturated,
    line_point_sink,
    line_points,
    no_exit_cycles,
    quotient_graph,
    simple_cycles,
    socle_generators,
    tree,
)

__all__ = [
    "Edge",
    "Graph",
    "Path",
    "Cycle",
    "VertexSet",
    "VertexKind",
    "VertexProfile",
    "CycleRecord",
    "DirectednessResult",
    "classify_vertices",
    "closure_trace",
    "cycles_pairwise_disjoint",
    "graphs_isomorphic",
    "hereditary_saturated_closure",
    "hsat_subsets_bruteforce",
    "is_downward_directed",
    "is_hereditary",
    "is_saturated",
    "line_point_sink",
    "line_points",
    "no_exit_cycles",
    "quotient_graph",
    "simple_cycles",
    "socle_generators",
    "tree",
]
