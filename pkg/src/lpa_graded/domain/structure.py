"""
Graph-theoretic predicates and constructions: trees, hereditary and saturated
sets, the closure induction, downward directedness, simple cycles with exits
and quotient graphs.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Dict, Iterable, List, Optional, Tuple

import networkx as nx

from ..utils.errors import GraphValidationError, OracleGuardError
from .graph import Cycle, Edge, Graph, VertexKind, VertexProfile, VertexSet

logger = logging.getLogger(__name__)

DEFAULT_HSAT_BRUTEFORCE_LIMIT = 12


def tree(g: Graph, v: str) -> VertexSet:
    """T(v) = {w : v >= w}."""
    return VertexSet(g, g.tree(v))


def _as_vertex_set(g: Graph, X: Iterable[str]) -> VertexSet:
    if isinstance(X, VertexSet):
        if X.graph is not g and X.graph != g:
            raise GraphValidationError("vertex set belongs to another graph", "vertices")
        return X
    return VertexSet.of(g, X)


def is_hereditary(g: Graph, H: Iterable[str]) -> bool:
    H = _as_vertex_set(g, H)
    return all(e.range in H for v in H for e in g.out_edges(v))


def is_saturated(g: Graph, H: Iterable[str]) -> bool:
    H = _as_vertex_set(g, H)
    for v in g.vertices:
        if v in H or g.is_sink(v):
            continue
        if all(e.range in H for e in g.out_edges(v)):
            return False
    return True


def _hereditary_violation(g: Graph, H: VertexSet) -> Optional[Edge]:
    for v in H:
        for e in g.out_edges(v):
            if e.range not in H:
                return e
    return None


def _saturation_violation(g: Graph, H: VertexSet) -> Optional[str]:
    for v in g.vertices:
        if v not in H and g.is_regular(v) and all(e.range in H for e in g.out_edges(v)):
            return v
    return None


def closure_trace(g: Graph, X: Iterable[str]) -> List[VertexSet]:
    """
    Rounds X_0 ⊆ X_1 ⊆ ... of the closure induction.

    X_0 is the union of the trees T(v) for v in X; X_{k+1} adds every regular
    vertex whose edges all land in X_k. The last element is the closure.
    """
    X = _as_vertex_set(g, X)
    current = set()
    for v in X:
        current |= g.tree(v)
    rounds = [VertexSet(g, frozenset(current))]
    while True:
        added = [
            v for v in g.vertices
            if v not in current
            and g.is_regular(v)
            and all(e.range in current for e in g.out_edges(v))
        ]
        if not added:
            break
        current.update(added)
        rounds.append(VertexSet(g, frozenset(current)))
    logger.debug(f"[CLOSURE] seed={len(X)} rounds={len(rounds)} size={len(current)}")
    return rounds


def hereditary_saturated_closure(g: Graph, X: Iterable[str]) -> VertexSet:
    """Smallest hereditary saturated set containing X."""
    return closure_trace(g, X)[-1]


def hsat_subsets_bruteforce(g: Graph, limit: int = DEFAULT_HSAT_BRUTEFORCE_LIMIT) -> List[VertexSet]:
    """All hereditary saturated subsets in size order, by exhaustive enumeration."""
    n = len(g.vertices)
    if n > limit:
        raise OracleGuardError(
            f"hsat brute force refused: {n} vertices exceeds the guard of {limit}"
        )
    found = []
    for size in range(n + 1):
        for members in combinations(g.vertices, size):
            H = VertexSet(g, frozenset(members))
            if is_hereditary(g, H) and is_saturated(g, H):
                found.append(H)
    return found


@dataclass(frozen=True)
class DirectednessResult:
    """Outcome of the downward-directedness check."""

    holds: bool
    failing_pair: Optional[Tuple[str, str]] = None
    common_descendants: Dict[Tuple[str, str], str] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        if self.holds:
            return {"holds": True}
        return {"holds": False, "failing_pair": list(self.failing_pair)}


def is_downward_directed(g: Graph) -> DirectednessResult:
    """Every pair of vertices has a common descendant."""
    witnesses: Dict[Tuple[str, str], str] = {}
    for i, u in enumerate(g.vertices):
        tree_u = g.tree(u)
        for v in g.vertices[i:]:
            common = tree_u & g.tree(v)
            if not common:
                return DirectednessResult(False, (u, v))
            witnesses[(u, v)] = next(w for w in g.vertices if w in common)
    return DirectednessResult(True, None, witnesses)


@dataclass(frozen=True)
class CycleRecord:
    """A simple cycle with its exit edges."""

    cycle: Cycle
    exits: Tuple[str, ...]

    @property
    def has_exits(self) -> bool:
        return bool(self.exits)

    def to_dict(self) -> Dict[str, Any]:
        return {"cycle": list(self.cycle.edges), "exits": list(self.exits)}


def _canonical_rotation(edges: Tuple[str, ...]) -> Tuple[str, ...]:
    return min(edges[i:] + edges[:i] for i in range(len(edges)))


def simple_cycles(g: Graph) -> List[CycleRecord]:
    """
    Every simple cycle of g in canonical rotation, sorted by edge sequence.

    networkx enumerates vertex cycles; parallel edges between consecutive
    cycle vertices each give a distinct edge cycle.
    """
    skeleton = nx.DiGraph()
    skeleton.add_nodes_from(g.vertices)
    parallel: Dict[Tuple[str, str], List[str]] = {}
    for e in g.edges:
        skeleton.add_edge(e.source, e.range)
        parallel.setdefault((e.source, e.range), []).append(e.id)

    seen = set()
    for vertex_cycle in nx.simple_cycles(skeleton):
        hops = [
            parallel[(vertex_cycle[i], vertex_cycle[(i + 1) % len(vertex_cycle)])]
            for i in range(len(vertex_cycle))
        ]
        for choice in product(*hops):
            seen.add(_canonical_rotation(tuple(choice)))

    records = []
    for edges in sorted(seen):
        cycle = Cycle(g.path(*edges))
        on_cycle = set(cycle.vertices(g))
        cycle_edges = set(edges)
        exits = tuple(e.id for e in g.edges if e.source in on_cycle and e.id not in cycle_edges)
        records.append(CycleRecord(cycle, exits))
    return records


def no_exit_cycles(g: Graph) -> List[CycleRecord]:
    return [r for r in simple_cycles(g) if not r.exits]


def cycles_pairwise_disjoint(g: Graph) -> bool:
    """True iff no vertex lies on two distinct simple cycles."""
    seen = set()
    for record in simple_cycles(g):
        vertices = set(record.cycle.vertices(g))
        if seen & vertices:
            return False
        seen |= vertices
    return True


def classify_vertices(g: Graph) -> Dict[str, VertexProfile]:
    """Profile every vertex: kind, bifurcation, line point, Laurent, no-exit cycle."""
    records = simple_cycles(g)
    on_cycle = set()
    on_no_exit = set()
    for record in records:
        vertices = record.cycle.vertices(g)
        on_cycle.update(vertices)
        if not record.exits:
            on_no_exit.update(vertices)

    profiles = {}
    for v in g.vertices:
        t = g.tree(v)
        degrees = [g.out_degree(w) for w in t]
        line_point = all(d <= 1 for d in degrees) and not (t & on_cycle)
        # every vertex of T(v) emitting exactly one edge makes T(v) the vertex set of one path μc
        laurent = all(d == 1 for d in degrees)
        profiles[v] = VertexProfile(
            kind=VertexKind.SINK if g.is_sink(v) else VertexKind.REGULAR,
            is_bifurcation=g.out_degree(v) >= 2,
            is_line_point=line_point,
            is_laurent=laurent,
            on_no_exit_cycle=v in on_no_exit,
        )
    return profiles


def line_points(g: Graph) -> List[str]:
    return [v for v, p in classify_vertices(g).items() if p.is_line_point]


def socle_generators(g: Graph) -> VertexSet:
    """Line points together with vertices on cycles without exits."""
    profiles = classify_vertices(g)
    return VertexSet(
        g, frozenset(v for v, p in profiles.items() if p.is_line_point or p.on_no_exit_cycle)
    )


def line_point_sink(g: Graph, v: str) -> str:
    """The sink at the end of the tree of a line point."""
    current = v
    while g.is_regular(current):
        edges = g.out_edges(current)
        if len(edges) != 1:
            raise GraphValidationError(f"{v} is not a line point", "vertices")
        current = edges[0].range
        if current == v:
            raise GraphValidationError(f"{v} is not a line point", "vertices")
    return current


def quotient_graph(g: Graph, H: Iterable[str], name: Optional[str] = None) -> Graph:
    """E∖H for a hereditary saturated set H."""
    H = _as_vertex_set(g, H)
    bad_edge = _hereditary_violation(g, H)
    if bad_edge is not None:
        raise GraphValidationError(
            f"not hereditary: edge {bad_edge.id} leaves {bad_edge.source} for {bad_edge.range}",
            "vertices",
        )
    bad_vertex = _saturation_violation(g, H)
    if bad_vertex is not None:
        raise GraphValidationError(
            f"not saturated: regular vertex {bad_vertex} has every edge ranging in the set",
            "vertices",
        )
    if not H:
        return g
    vertices = tuple(v for v in g.vertices if v not in H)
    edges = tuple(e for e in g.edges if e.range not in H)
    return Graph(name or f"{g.name}_q", vertices, edges)


def graphs_isomorphic(g: Graph, h: Graph) -> bool:
    """Structural multigraph isomorphism, ignoring identifiers."""
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return False
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())
