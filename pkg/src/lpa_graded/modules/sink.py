"""
Graded modules given by explicit generator actions, the sink modules N_w,
operator-level relation checks and a graded-simplicity oracle.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..domain.graph import Graph, Path, VertexSet
from ..domain.structure import classify_vertices
from ..grading.decompositions import has_infinitely_many_paths, paths_ending_at
from ..utils.errors import GraphMismatchError, ModuleError, OracleGuardError
from ..utils.linalg import EchelonBasis, SparseVector, apply_operator, compose_operators

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_DIM_LIMIT = 64

Operator = Dict[int, SparseVector]


class GeneratorKind(Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    GHOST = "ghost"


@dataclass(frozen=True)
class ModuleGenerator:
    """A vertex v, an edge e or a ghost edge e*."""

    kind: GeneratorKind
    name: str

    @property
    def degree(self) -> int:
        return {GeneratorKind.VERTEX: 0, GeneratorKind.EDGE: 1, GeneratorKind.GHOST: -1}[self.kind]

    def label(self) -> str:
        return f"{self.name}^*" if self.kind is GeneratorKind.GHOST else self.name


def vertex_gen(v: str) -> ModuleGenerator:
    return ModuleGenerator(GeneratorKind.VERTEX, v)


def edge_gen(e: str) -> ModuleGenerator:
    return ModuleGenerator(GeneratorKind.EDGE, e)


def ghost_gen(e: str) -> ModuleGenerator:
    return ModuleGenerator(GeneratorKind.GHOST, e)


@dataclass
class GeneratorAction:
    """Sparse basis-to-basis map {input index: {output index: coef}}."""

    generator: ModuleGenerator
    table: Operator = field(default_factory=dict)

    def apply(self, vector: Dict[int, Fraction]) -> SparseVector:
        return apply_operator(self.table, vector)


class GradedModule:
    """Finite-dimensional graded left module over L_K(E) with homogeneous basis."""

    def __init__(
        self,
        graph: Graph,
        labels: List[str],
        degrees: List[int],
        actions: Dict[ModuleGenerator, GeneratorAction],
        name: str = "",
    ):
        if len(labels) != len(degrees):
            raise ModuleError("basis labels and degrees differ in length")
        self.graph = graph
        self.labels = list(labels)
        self.degrees = list(degrees)
        self.actions = actions
        self.name = name
        for v in graph.vertices:
            actions.setdefault(vertex_gen(v), GeneratorAction(vertex_gen(v)))
        for e in graph.edges:
            actions.setdefault(edge_gen(e.id), GeneratorAction(edge_gen(e.id)))
            actions.setdefault(ghost_gen(e.id), GeneratorAction(ghost_gen(e.id)))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def generators(self) -> List[ModuleGenerator]:
        gens = [vertex_gen(v) for v in self.graph.vertices]
        gens.extend(edge_gen(e.id) for e in self.graph.edges)
        gens.extend(ghost_gen(e.id) for e in self.graph.edges)
        return gens

    def operator(self, generator: ModuleGenerator) -> Operator:
        return self.actions[generator].table

    def act(self, generator: ModuleGenerator, vector: Dict[int, Fraction]) -> SparseVector:
        return self.actions[generator].apply(vector)

    def degree_components(self) -> Dict[int, List[int]]:
        components: Dict[int, List[int]] = {}
        for index, d in enumerate(self.degrees):
            components.setdefault(d, []).append(index)
        return dict(sorted(components.items()))

    def with_entry_removed(self, generator: ModuleGenerator, input_index: int) -> "GradedModule":
        """Copy of the module with one action column deleted."""
        actions = {
            g: GeneratorAction(g, {i: SparseVector(col) for i, col in a.table.items()})
            for g, a in self.actions.items()
        }
        actions[generator].table.pop(input_index, None)
        return GradedModule(self.graph, self.labels, self.degrees, actions, self.name)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "dim": self.dim, "basis": list(self.labels), "degrees": list(self.degrees)}


class SinkModule(GradedModule):
    """N_w: basis the paths ending at the sink w, graded by length."""

    def __init__(self, graph: Graph, sink: str, basis: List[Path]):
        self.sink = sink
        self.basis = list(basis)
        index = {p: i for i, p in enumerate(self.basis)}
        actions: Dict[ModuleGenerator, GeneratorAction] = {}

        for v in graph.vertices:
            table = {i: SparseVector({i: 1}) for i, p in enumerate(self.basis) if p.start == v}
            actions[vertex_gen(v)] = GeneratorAction(vertex_gen(v), table)
        for e in graph.edges:
            raise_table = {}
            lower_table = {}
            for i, p in enumerate(self.basis):
                if p.start == e.range:
                    raise_table[i] = SparseVector({index[Path(e.source, (e.id,) + p.edges, p.end)]: 1})
                if p.edges and p.edges[0] == e.id:
                    lower_table[i] = SparseVector({index[Path(e.range, p.edges[1:], p.end)]: 1})
            actions[edge_gen(e.id)] = GeneratorAction(edge_gen(e.id), raise_table)
            actions[ghost_gen(e.id)] = GeneratorAction(ghost_gen(e.id), lower_table)

        super().__init__(
            graph,
            [p.label() for p in self.basis],
            [p.length for p in self.basis],
            actions,
            name=f"N_{sink}",
        )

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["sink"] = self.sink
        return data


def build_sink_module(g: Graph, w: str) -> SinkModule:
    """N_w for a sink w no cycle reaches."""
    g.require_vertex(w)
    if not g.is_sink(w):
        raise ModuleError(f"{w} is not a sink: it emits {', '.join(e.id for e in g.out_edges(w))}")
    if has_infinitely_many_paths(g, w):
        raise ModuleError(
            f"N_{w} has an infinite basis: a cycle reaches {w}, so paths ending at {w} are unbounded"
        )
    return SinkModule(g, w, paths_ending_at(g, w))


def _same(left: Operator, right: Operator) -> bool:
    keys = set(left) | set(right)
    return all(dict(left.get(k, {})) == dict(right.get(k, {})) for k in keys)


def _identity_on(indices: List[int]) -> Operator:
    return {i: SparseVector({i: 1}) for i in indices}


@dataclass
class RelationReport:
    """Outcome of the relation check; violations in check order."""

    checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def first_violation(self) -> Optional[str]:
        return self.violations[0] if self.violations else None

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "checked": self.checked, "violations": list(self.violations)}


def check_module_relations(m: GradedModule) -> RelationReport:
    """Relations (1)-(4) as identities between action operators."""
    g = m.graph
    report = RelationReport()
    op = m.operator

    def expect(condition: bool, message: str) -> None:
        report.checked += 1
        if not condition:
            report.violations.append(message)

    for v in g.vertices:
        for u in g.vertices:
            product = compose_operators(op(vertex_gen(v)), op(vertex_gen(u)))
            target = op(vertex_gen(v)) if u == v else {}
            expect(_same(product, target), f"relation (1): {v} {u}")

    for e in g.edges:
        E, Es = op(edge_gen(e.id)), op(ghost_gen(e.id))
        S, R = op(vertex_gen(e.source)), op(vertex_gen(e.range))
        expect(_same(compose_operators(S, E), E), f"relation (2): {e.source} {e.id} = {e.id}")
        expect(_same(compose_operators(E, R), E), f"relation (2): {e.id} {e.range} = {e.id}")
        expect(_same(compose_operators(R, Es), Es), f"relation (2): {e.range} {e.id}^* = {e.id}^*")
        expect(_same(compose_operators(Es, S), Es), f"relation (2): {e.id}^* {e.source} = {e.id}^*")

    for e in g.edges:
        for f in g.edges:
            product = compose_operators(op(ghost_gen(e.id)), op(edge_gen(f.id)))
            target = op(vertex_gen(e.range)) if e.id == f.id else {}
            expect(_same(product, target), f"relation (3): {e.id}^* {f.id}")

    for v in g.vertices:
        out = g.out_edges(v)
        if not out:
            continue
        total: Operator = {}
        for e in out:
            for i, column in compose_operators(op(edge_gen(e.id)), op(ghost_gen(e.id))).items():
                total[i] = total.get(i, SparseVector()) + column
        total = {i: c for i, c in total.items() if c}
        expect(_same(total, op(vertex_gen(v))), f"relation (4) at {v}")

    return report


def action_degree_violations(m: GradedModule) -> List[str]:
    """Generators that fail to shift degrees by their own degree."""
    found = []
    for gen in m.generators():
        for i, column in m.operator(gen).items():
            for j in column:
                if m.degrees[j] != m.degrees[i] + gen.degree:
                    found.append(f"{gen.label()} maps {m.labels[i]} to {m.labels[j]}")
    return found


def _orbit_rank(m: GradedModule, seeds: List[int]) -> int:
    """Dimension of the submodule generated by the given basis vectors."""
    basis = EchelonBasis()
    queue = []
    for i in seeds:
        row = basis.insert({i: 1})
        if row is not None:
            queue.append(row)
    gens = m.generators()
    while queue:
        vector = queue.pop()
        for gen in gens:
            row = basis.insert(m.act(gen, vector))
            if row is not None:
                queue.append(row)
    return basis.rank


def _flatten(op: Operator) -> Dict[Tuple[int, int], Fraction]:
    return {(i, j): c for i, column in op.items() for j, c in column.items()}


def _transfer_dimension(m: GradedModule, degree: int) -> int:
    """
    Dimension of the algebra of maps M_d -> M_d induced by L_K(E).

    Maps M_d -> M_d' are closed under left composition with generators until
    every Hom space stabilizes.
    """
    indices = m.degree_components()[degree]
    spans: Dict[int, EchelonBasis] = {degree: EchelonBasis()}
    start = _identity_on(indices)
    spans[degree].insert(_flatten(start))
    queue = [(degree, start)]
    gens = m.generators()
    while queue:
        d, current = queue.pop()
        for gen in gens:
            image = compose_operators(m.operator(gen), current)
            if not image:
                continue
            target = d + gen.degree
            basis = spans.setdefault(target, EchelonBasis())
            if basis.insert(_flatten(image)) is not None:
                queue.append((target, image))
    return spans[degree].rank


def graded_simplicity_oracle(m: GradedModule, dim_limit: int = DEFAULT_ORACLE_DIM_LIMIT) -> bool:
    """
    Decide whether m has no proper nonzero graded submodule.

    Per degree d: the submodule generated by M_d must be all of m, and the
    maps M_d -> M_d induced by the algebra must form all of End(M_d). Exact
    for modules whose homogeneous components have trivial endomorphism
    division algebra, which covers every module built from path bases.
    """
    if m.dim == 0:
        raise ModuleError("zero-dimensional module is not a valid oracle input")
    if m.dim > dim_limit:
        raise OracleGuardError(f"module dimension {m.dim} exceeds the oracle guard of {dim_limit}")
    for d, indices in m.degree_components().items():
        if _orbit_rank(m, indices) != m.dim:
            logger.debug(f"[ORACLE] {m.name}: degree {d} generates a proper submodule")
            return False
        if _transfer_dimension(m, d) != len(indices) ** 2:
            logger.debug(f"[ORACLE] {m.name}: degree {d} component is not simple over its transfer algebra")
            return False
    return True


def direct_sum(m1: GradedModule, m2: GradedModule) -> GradedModule:
    """External direct sum over the same graph."""
    if m1.graph != m2.graph:
        raise GraphMismatchError(f"modules over different graphs: {m1.graph.name} and {m2.graph.name}")
    offset = m1.dim
    actions: Dict[ModuleGenerator, GeneratorAction] = {}
    for gen in m1.generators():
        table: Operator = {i: SparseVector(col) for i, col in m1.operator(gen).items()}
        for i, column in m2.operator(gen).items():
            table[i + offset] = SparseVector({j + offset: c for j, c in column.items()})
        actions[gen] = GeneratorAction(gen, table)
    labels = [f"1:{label}" for label in m1.labels] + [f"2:{label}" for label in m2.labels]
    return GradedModule(
        m1.graph, labels, m1.degrees + m2.degrees, actions, name=f"{m1.name}+{m2.name}"
    )


def graded_simple_left_ideals(g: Graph) -> VertexSet:
    """Vertices v whose left ideal Lv is graded-simple: line points and Laurent vertices."""
    profiles = classify_vertices(g)
    return VertexSet(g, frozenset(v for v, p in profiles.items() if p.is_line_point or p.is_laurent))


@dataclass
class ModuleReport:
    """Summary of a sink module: dimension, degrees, relations, graded simplicity."""

    module: SinkModule
    relations: RelationReport
    graded_simple: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sink": self.module.sink,
            "dim": self.module.dim,
            "degrees": list(self.module.degrees),
            "relations": "pass" if self.relations.passed else self.relations.first_violation,
            "graded_simple": self.graded_simple,
        }


def analyze_sink_module(g: Graph, w: str, dim_limit: int = DEFAULT_ORACLE_DIM_LIMIT) -> ModuleReport:
    module = build_sink_module(g, w)
    relations = check_module_relations(module)
    simple = graded_simplicity_oracle(module, dim_limit)
    logger.info(f"[MODULE] sink={w} dim={module.dim} relations={relations.passed} simple={simple}")
    return ModuleReport(module, relations, simple)
