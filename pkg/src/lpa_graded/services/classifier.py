"""
Decision procedures: graph-side necessary conditions, the graded Naimark
property and the socular chain with its count of graded-simple classes.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from ..domain.graph import Graph, VertexSet
from ..domain.structure import (
    DirectednessResult,
    classify_vertices,
    closure_trace,
    cycles_pairwise_disjoint,
    hereditary_saturated_closure,
    hsat_subsets_bruteforce,
    is_downward_directed,
    no_exit_cycles,
    quotient_graph,
    socle_generators,
)
from ..grading.decompositions import (
    DEFAULT_MAX_PATH_LEN,
    acyclic_decomposition,
    comet_decomposition,
    graded_socle,
)
from ..grading.matrices import MatrixBlock
from ..utils.errors import HypothesisError, InvariantViolation

logger = logging.getLogger(__name__)


def _closure_is_everything(g: Graph, v: str) -> bool:
    return len(hereditary_saturated_closure(g, [v])) == len(g.vertices)


@dataclass
class NecessaryConditions:
    """Graph-side conditions every graph with the graded Naimark property meets."""

    downward_directed: DirectednessResult
    only_trivial_hsat: bool
    hsat_counterexample: Optional[str]
    cycles_disjoint: bool
    bruteforce_checked: bool = False
    row_finite: bool = True

    @property
    def all_pass(self) -> bool:
        return self.downward_directed.holds and self.only_trivial_hsat and self.cycles_disjoint

    def failures(self) -> List[str]:
        found = []
        if not self.downward_directed.holds:
            u, v = self.downward_directed.failing_pair
            found.append(f"not downward directed: {u} and {v} have no common descendant")
        if not self.only_trivial_hsat:
            found.append(
                f"nontrivial hereditary saturated subset: closure of {self.hsat_counterexample} is proper"
            )
        if not self.cycles_disjoint:
            found.append("two distinct cycles share a vertex")
        return found

    def to_dict(self) -> Dict[str, Any]:
        return {
            "row_finite": self.row_finite,
            "downward_directed": self.downward_directed.to_dict(),
            "only_trivial_hsat": self.only_trivial_hsat,
            "hsat_counterexample": self.hsat_counterexample,
            "hsat_bruteforce_checked": self.bruteforce_checked,
            "cycles_disjoint": self.cycles_disjoint,
            "all_pass": self.all_pass,
        }


def is_graded_simple_ring(g: Graph) -> bool:
    """∅ and E^0 are the only hereditary saturated subsets of a nonempty graph."""
    return bool(g.vertices) and all(_closure_is_everything(g, v) for v in g.vertices)


def necessary_conditions(g: Graph, hsat_bruteforce_limit: int = 12) -> NecessaryConditions:
    """Downward directedness, triviality of hereditary saturated sets, disjoint cycles."""
    counterexample = next((v for v in g.vertices if not _closure_is_everything(g, v)), None)
    only_trivial = counterexample is None
    checked = False
    if len(g.vertices) <= hsat_bruteforce_limit:
        subsets = hsat_subsets_bruteforce(g, hsat_bruteforce_limit)
        brute_trivial = len(subsets) <= 2
        if brute_trivial != only_trivial:
            raise InvariantViolation(
                f"closure check and brute force disagree on {g.name}: "
                f"{only_trivial} vs {len(subsets)} hereditary saturated subsets"
            )
        checked = True
    return NecessaryConditions(
        downward_directed=is_downward_directed(g),
        only_trivial_hsat=only_trivial,
        hsat_counterexample=counterexample,
        cycles_disjoint=cycles_pairwise_disjoint(g),
        bruteforce_checked=checked,
    )


class WitnessKind(Enum):
    LINE_POINT = "line point"
    NO_EXIT_CYCLE = "cycle without exits"


@dataclass
class NaimarkWitness:
    vertex: str
    kind: WitnessKind
    closure_trace: List[VertexSet]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertex": self.vertex,
            "kind": self.kind.value,
            "closure_trace": [s.to_list() for s in self.closure_trace],
        }


@dataclass
class NaimarkVerdict:
    """Outcome of the graded Naimark decision."""

    holds: bool
    witness: Optional[NaimarkWitness] = None
    failed_condition: Optional[str] = None
    counterexample: Optional[str] = None
    matrix_form: Optional[MatrixBlock] = None
    remark_cross_check: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "witness": self.witness.to_dict() if self.witness else None,
            "failed": (
                {"condition": self.failed_condition, "counterexample": self.counterexample}
                if not self.holds else None
            ),
            "form": self.matrix_form.to_dict() if self.matrix_form else None,
            "remark_cross_check": self.remark_cross_check,
        }


def graded_naimark(g: Graph, bound: int = DEFAULT_MAX_PATH_LEN) -> NaimarkVerdict:
    """
    Decide whether all graded-simple modules are graded isomorphic.

    Holds iff g is downward directed and some line point or vertex on a cycle
    without exits has closure E^0; the least such identifier is reported.
    """
    if not g.vertices:
        raise HypothesisError("graded Naimark decision needs a nonempty graph")

    directed = is_downward_directed(g)
    if not directed.holds:
        u, v = directed.failing_pair
        return NaimarkVerdict(
            False,
            failed_condition="downward_directed",
            counterexample=f"{u} and {v} have no common descendant",
        )

    profiles = classify_vertices(g)
    candidates = sorted(v for v, p in profiles.items() if p.is_line_point or p.on_no_exit_cycle)
    for v in candidates:
        trace = closure_trace(g, [v])
        if len(trace[-1]) != len(g.vertices):
            continue
        if profiles[v].is_line_point:
            kind = WitnessKind.LINE_POINT
            form = acyclic_decomposition(g, v, bound)
        else:
            kind = WitnessKind.NO_EXIT_CYCLE
            record = next(r for r in no_exit_cycles(g) if v in r.cycle.vertices(g))
            form = comet_decomposition(g, record, bound)
        socle = graded_socle(g, bound)
        cross_check = len(socle) == 1 and socle[0] == form
        logger.debug(f"[NAIMARK] graph={g.name} witness={v} kind={kind.value}")
        return NaimarkVerdict(
            True,
            witness=NaimarkWitness(v, kind, trace),
            matrix_form=form,
            remark_cross_check=cross_check,
        )

    if candidates:
        detail = ", ".join(
            f"closure of {v} has {len(hereditary_saturated_closure(g, [v]))} of {len(g.vertices)} vertices"
            for v in candidates
        )
    else:
        detail = "no line points and no cycles without exits"
    return NaimarkVerdict(False, failed_condition="single_vertex_closure", counterexample=detail)


@dataclass
class ChainLayer:
    """One step of the chain: the vertices absorbed and the socle blocks of the current quotient."""

    graph: Graph
    added_vertices: VertexSet
    blocks: List[MatrixBlock]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": self.added_vertices.to_list(),
            "blocks": [b.to_dict() for b in self.blocks],
        }


@dataclass
class ChainVerdict:
    """Either a finite class count or an uncountability reason."""

    count: Optional[int] = None
    uncountable: Optional[str] = None

    @property
    def is_countable(self) -> bool:
        return self.uncountable is None

    def to_dict(self) -> Dict[str, Any]:
        if self.is_countable:
            return {"count": self.count}
        return {"uncountable": self.uncountable}

    def describe(self) -> str:
        return f"classes: {self.count}" if self.is_countable else f"classes: uncountable ({self.uncountable})"


@dataclass
class SocularChainReport:
    layers: List[ChainLayer] = field(default_factory=list)
    verdict: ChainVerdict = field(default_factory=ChainVerdict)

    @property
    def tau(self) -> int:
        return len(self.layers)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "layers": [layer.to_dict() for layer in self.layers],
            "tau": self.tau,
            "verdict": self.verdict.to_dict(),
        }


def layer_descriptions(report: SocularChainReport) -> List[List[str]]:
    """Block descriptions per layer; vertex names do not appear."""
    return [[block.describe() for block in layer.blocks] for layer in report.layers]


def socular_chain(g: Graph, bound: int = DEFAULT_MAX_PATH_LEN) -> SocularChainReport:
    """
    Iterate socle extraction on quotient graphs.

    Each layer closes the line points and no-exit-cycle vertices of the
    current graph, records its graded socle blocks and passes to the
    quotient. A nonempty quotient without such vertices yields the
    uncountable verdict.
    """
    report = SocularChainReport()
    current = g
    while current.vertices:
        generators = socle_generators(current)
        if not generators:
            report.verdict = ChainVerdict(
                uncountable=(
                    f"layer {report.tau + 1}: {len(current.vertices)} remaining vertices "
                    "contain no line point and no cycle without exits"
                )
            )
            logger.debug(f"[CHAIN] graph={g.name} stalled at layer={report.tau + 1}")
            return report
        absorbed = hereditary_saturated_closure(current, generators)
        blocks = graded_socle(current, bound)
        report.layers.append(ChainLayer(current, absorbed, blocks))
        logger.debug(
            f"[CHAIN] graph={g.name} layer={report.tau} added={len(absorbed)} blocks={len(blocks)}"
        )
        current = quotient_graph(current, absorbed)
    report.verdict = ChainVerdict(count=sum(len(layer.blocks) for layer in report.layers))
    return report


def count_graded_simple_classes(g: Graph, bound: int = DEFAULT_MAX_PATH_LEN) -> ChainVerdict:
    """Number of graded-simple classes (shifts identified), or uncountable."""
    return socular_chain(g, bound).verdict
