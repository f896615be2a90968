"""
Immutable finite directed graph model: graphs, paths, cycles and vertex sets.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from ..utils.errors import GraphValidationError
from ..utils.ids import is_valid_identifier


@dataclass(frozen=True)
class Edge:
    """An edge record {id, source, range}."""

    id: str
    source: str
    range: str

    def to_dict(self) -> Dict[str, str]:
        return {"id": self.id, "source": self.source, "range": self.range}


@dataclass(frozen=True)
class Graph:
    """
    A finite directed graph E = (E^0, E^1, s, r).

    Vertices and edges keep their declaration order; every operation that
    iterates over the graph uses that order so reports are reproducible.
    """

    name: str
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    _out: Dict[str, Tuple[Edge, ...]] = field(init=False, repr=False, compare=False)
    _in: Dict[str, Tuple[Edge, ...]] = field(init=False, repr=False, compare=False)
    _by_id: Dict[str, Edge] = field(init=False, repr=False, compare=False)
    _trees: Dict[str, FrozenSet[str]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        self._validate()
        out: Dict[str, List[Edge]] = {v: [] for v in self.vertices}
        incoming: Dict[str, List[Edge]] = {v: [] for v in self.vertices}
        for edge in self.edges:
            out[edge.source].append(edge)
            incoming[edge.range].append(edge)
        object.__setattr__(self, "_out", {v: tuple(es) for v, es in out.items()})
        object.__setattr__(self, "_in", {v: tuple(es) for v, es in incoming.items()})
        object.__setattr__(self, "_by_id", {e.id: e for e in self.edges})
        object.__setattr__(self, "_trees", {})

    def _validate(self) -> None:
        seen = set()
        for vertex in self.vertices:
            if not is_valid_identifier(vertex):
                raise GraphValidationError(f"invalid vertex identifier {vertex!r}", "vertices")
            if vertex in seen:
                raise GraphValidationError(f"duplicate vertex {vertex}", "vertices")
            seen.add(vertex)
        edge_ids = set()
        for edge in self.edges:
            if not is_valid_identifier(edge.id):
                raise GraphValidationError(f"invalid edge identifier {edge.id!r}", "edges")
            if edge.id in edge_ids:
                raise GraphValidationError(f"duplicate edge {edge.id}", "edges")
            if edge.id in seen:
                raise GraphValidationError(
                    f"identifier {edge.id} names both a vertex and an edge", "edges"
                )
            edge_ids.add(edge.id)
            for role, endpoint in (("source", edge.source), ("range", edge.range)):
                if endpoint not in seen:
                    raise GraphValidationError(
                        f"edge {edge.id}: {role} vertex {endpoint} is not declared", "edges"
                    )

    @classmethod
    def build(
        cls,
        name: str,
        vertices: Iterable[str],
        edges: Iterable[Tuple[str, str, str]],
    ) -> "Graph":
        """Create a graph from (id, source, range) triples."""
        return cls(name, tuple(vertices), tuple(Edge(*triple) for triple in edges))

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise GraphValidationError(f"unknown edge {edge_id}", "edges") from None

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._by_id

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self._out

    def require_vertex(self, vertex: str) -> str:
        if vertex not in self._out:
            raise GraphValidationError(f"unknown vertex {vertex}", "vertices")
        return vertex

    def out_edges(self, vertex: str) -> Tuple[Edge, ...]:
        return self._out[self.require_vertex(vertex)]

    def in_edges(self, vertex: str) -> Tuple[Edge, ...]:
        return self._in[self.require_vertex(vertex)]

    def out_degree(self, vertex: str) -> int:
        return len(self.out_edges(vertex))

    def is_sink(self, vertex: str) -> bool:
        return not self.out_edges(vertex)

    def is_regular(self, vertex: str) -> bool:
        return bool(self.out_edges(vertex))

    def sinks(self) -> List[str]:
        return [v for v in self.vertices if not self._out[v]]

    def tree(self, vertex: str) -> FrozenSet[str]:
        """T(v): every vertex reachable from v, v included."""
        cached = self._trees.get(vertex)
        if cached is None:
            self.require_vertex(vertex)
            reached = {vertex}
            stack = [vertex]
            while stack:
                current = stack.pop()
                for edge in self._out[current]:
                    if edge.range not in reached:
                        reached.add(edge.range)
                        stack.append(edge.range)
            cached = frozenset(reached)
            self._trees[vertex] = cached
        return cached

    def to_networkx(self) -> nx.MultiDiGraph:
        """MultiDiGraph view keyed by edge id."""
        graph = nx.MultiDiGraph(name=self.name)
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.source, edge.range, key=edge.id)
        return graph

    def vertex_path(self, vertex: str) -> "Path":
        return Path(self.require_vertex(vertex), (), vertex)

    def path(self, *edge_ids: str) -> "Path":
        """Build a path from consecutive edge ids."""
        if not edge_ids:
            raise GraphValidationError("a path of positive length needs edges; use vertex_path", "edges")
        edges = [self.edge(e) for e in edge_ids]
        for left, right in zip(edges, edges[1:]):
            if left.range != right.source:
                raise GraphValidationError(
                    f"edges {left.id} and {right.id} do not compose: r({left.id}) = {left.range} "
                    f"but s({right.id}) = {right.source}",
                    "edges",
                )
        return Path(edges[0].source, tuple(edge_ids), edges[-1].range)

    def vertex_set(self, members: Iterable[str]) -> "VertexSet":
        return VertexSet.of(self, members)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "vertices": list(self.vertices),
            "edges": [e.to_dict() for e in self.edges],
        }


@dataclass(frozen=True)
class Path:
    """A finite path: start vertex, edge sequence (possibly empty), end vertex."""

    start: str
    edges: Tuple[str, ...]
    end: str

    @property
    def length(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def concat(self, other: "Path") -> "Path":
        if self.end != other.start:
            raise GraphValidationError(
                f"paths do not compose: {self.end} != {other.start}", "edges"
            )
        return Path(self.start, self.edges + other.edges, other.end)

    def is_prefix_of(self, other: "Path") -> bool:
        return self.start == other.start and other.edges[: len(self.edges)] == self.edges

    def remainder_after(self, prefix: "Path") -> "Path":
        """The path q' with self = prefix q'."""
        if not prefix.is_prefix_of(self):
            raise GraphValidationError("not a prefix", "edges")
        return Path(prefix.end, self.edges[len(prefix.edges):], self.end)

    def label(self) -> str:
        return " ".join(self.edges) if self.edges else self.start

    def sort_key(self) -> Tuple[int, Tuple[str, ...], str]:
        return (len(self.edges), self.edges, self.start)


@dataclass(frozen=True)
class Cycle:
    """A cycle: closed path of positive length whose edge sources are distinct."""

    path: Path

    def __post_init__(self):
        if self.path.length == 0 or self.path.start != self.path.end:
            raise GraphValidationError("a cycle is a closed path of positive length", "edges")

    @classmethod
    def of(cls, graph: Graph, edge_ids: Iterable[str]) -> "Cycle":
        path = graph.path(*edge_ids)
        sources = [graph.edge(e).source for e in path.edges]
        if len(set(sources)) != len(sources):
            raise GraphValidationError(
                f"closed path {' '.join(path.edges)} repeats a vertex; not a cycle", "edges"
            )
        return cls(path)

    @property
    def edges(self) -> Tuple[str, ...]:
        return self.path.edges

    @property
    def length(self) -> int:
        return self.path.length

    def vertices(self, graph: Graph) -> Tuple[str, ...]:
        return tuple(graph.edge(e).source for e in self.path.edges)

    def base(self, graph: Graph) -> str:
        """Canonical base vertex: the least vertex identifier on the cycle."""
        return min(self.vertices(graph))

    def rotated_to(self, graph: Graph, vertex: str) -> Path:
        """The cycle read as a closed path based at vertex."""
        sources = self.vertices(graph)
        if vertex not in sources:
            raise GraphValidationError(f"vertex {vertex} is not on the cycle", "vertices")
        i = sources.index(vertex)
        edges = self.path.edges[i:] + self.path.edges[:i]
        return Path(vertex, edges, vertex)


class VertexKind(Enum):
    """Sink or regular; finite graphs have no infinite emitters."""
    SINK = "sink"
    REGULAR = "regular"


@dataclass(frozen=True)
class VertexProfile:
    """Classification of one vertex."""

    kind: VertexKind
    is_bifurcation: bool
    is_line_point: bool
    is_laurent: bool
    on_no_exit_cycle: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "is_bifurcation": self.is_bifurcation,
            "is_line_point": self.is_line_point,
            "is_laurent": self.is_laurent,
            "on_no_exit_cycle": self.on_no_exit_cycle,
        }


class VertexSet:
    """A subset of a graph's vertices iterated in declaration order."""

    __slots__ = ("graph", "members")

    def __init__(self, graph: Graph, members: FrozenSet[str]):
        self.graph = graph
        self.members = members

    @classmethod
    def of(cls, graph: Graph, members: Iterable[str]) -> "VertexSet":
        members = frozenset(members)
        for vertex in members:
            graph.require_vertex(vertex)
        return cls(graph, members)

    def __iter__(self) -> Iterator[str]:
        return (v for v in self.graph.vertices if v in self.members)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.members == other.members
        if isinstance(other, (set, frozenset)):
            return self.members == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.members)

    def __le__(self, other: "VertexSet") -> bool:
        return self.members <= _members(other)

    def __or__(self, other) -> "VertexSet":
        return VertexSet(self.graph, self.members | _members(other))

    def __and__(self, other) -> "VertexSet":
        return VertexSet(self.graph, self.members & _members(other))

    def __sub__(self, other) -> "VertexSet":
        return VertexSet(self.graph, self.members - _members(other))

    def to_list(self) -> List[str]:
        return list(self)

    def __repr__(self) -> str:
        return "{" + ", ".join(self) + "}"


def _members(other: Any) -> FrozenSet[str]:
    return other.members if isinstance(other, VertexSet) else frozenset(other)
