"""
Checks the graded isomorphism L_K(E) -> M_n(A)(δ̄) on generating monomials.

The map sends p_i c^k p_j* to e_ij(x^{km}) (c the anchoring cycle based at
u, m its length; k = 0 and no cycle for a sink anchor). On an arbitrary
monomial p q* it is evaluated by expanding r(p) = Σ γ γ* over the paths γ
from r(p) to the anchor that meet it only at their end.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from ..algebra.terms import LpaContext, LpaElement, Monomial
from ..domain.graph import Graph, Path
from ..utils.errors import GradingError, HypothesisError
from ..utils.linalg import EchelonBasis
from .matrices import AnchorKind, GradedMatrix, MatrixBlock, entry_degree

logger = logging.getLogger(__name__)

MAX_REPORTED_VIOLATIONS = 20


@dataclass
class WitnessReport:
    """Outcome of a witness check."""

    block: MatrixBlock
    bound: int
    checked_monomials: int = 0
    checked_pairs: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add_violation(self, message: str) -> None:
        if len(self.violations) < MAX_REPORTED_VIOLATIONS:
            self.violations.append(message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "bound": self.bound,
            "checked_monomials": self.checked_monomials,
            "checked_pairs": self.checked_pairs,
            "violations": list(self.violations),
        }


@dataclass(frozen=True)
class Generator:
    """p_i c^k p_j* with its intended image e_ij(x^{km})."""

    i: int
    j: int
    k: int
    monomial: Monomial

    def label(self) -> str:
        return str(self.monomial)


class WitnessMap:
    """The isomorphism determined by a finite-index block."""

    def __init__(self, context: LpaContext, block: MatrixBlock):
        self.context = context
        self.graph = context.graph
        self.block = block
        self._check_hypotheses()
        self.anchor = block.anchor_vertex
        self.cycle = (
            Path(self.anchor, block.anchor_cycle, self.anchor)
            if block.anchor_kind is AnchorKind.CYCLE
            else self.graph.vertex_path(self.anchor)
        )
        self.index = {p: i for i, p in enumerate(block.paths)}
        self._first_hits = lru_cache(maxsize=None)(self._paths_to_anchor)

    def _check_hypotheses(self) -> None:
        block, g = self.block, self.graph
        if block.infinite or not block.paths:
            raise HypothesisError("witness check needs a block with a finite, enumerated index")
        for v in g.vertices:
            if block.anchor_vertex not in g.tree(v):
                raise HypothesisError(
                    f"block does not span the graph: {v} does not reach {block.anchor_vertex}"
                )

    def _paths_to_anchor(self, vertex: str) -> Tuple[Path, ...]:
        """Paths from vertex to the anchor meeting it only at their end."""
        if vertex == self.anchor:
            return (self.graph.vertex_path(vertex),)
        found = []
        for e in self.graph.out_edges(vertex):
            head = self.graph.path(e.id)
            for tail in self._first_hits(e.range):
                found.append(head.concat(tail))
        return tuple(found)

    def _split(self, path: Path) -> Tuple[int, int]:
        """path = p_i c^a; returns (i, a)."""
        g = self.graph
        sources = [g.edge(e).source for e in path.edges] + [path.end]
        first = sources.index(self.anchor)
        prefix = Path(path.start, path.edges[:first], self.anchor)
        rest = path.edges[first:]
        m = self.cycle.length
        if m == 0:
            a = 0
        else:
            a, remainder = divmod(len(rest), m)
            if remainder or rest != self.cycle.edges * a:
                raise HypothesisError(f"path {path.label()} does not end in powers of the cycle")
        return self.index[prefix], a

    def image_of_monomial(self, m: Monomial) -> GradedMatrix:
        result = GradedMatrix.for_block(self.block)
        period = max(self.cycle.length, 1)
        for gamma in self._first_hits(m.p.end):
            i, a = self._split(m.p.concat(gamma))
            j, b = self._split(m.q.concat(gamma))
            result = result + GradedMatrix.unit(self.block, i, j, (a - b) * period)
        return result

    def image(self, element: LpaElement) -> GradedMatrix:
        result = GradedMatrix.for_block(self.block)
        for m, coef in element.items():
            result = result + self.image_of_monomial(m).scaled(coef)
        return result

    def generators(self, bound: int) -> List[Generator]:
        """All p_i c^k p_j* with |p_i| + |k| m + |p_j| <= bound."""
        paths = self.block.paths
        m = self.cycle.length
        found = []
        for i, p in enumerate(paths):
            for j, q in enumerate(paths):
                budget = bound - p.length - q.length
                if budget < 0:
                    continue
                k_max = budget // m if m else 0
                for k in range(-k_max, k_max + 1):
                    found.append(Generator(i, j, k, self._generator_monomial(p, q, k)))
        return found

    def _generator_monomial(self, p: Path, q: Path, k: int) -> Monomial:
        loop = Path(self.anchor, self.cycle.edges * abs(k), self.anchor)
        if k >= 0:
            return Monomial(p.concat(loop), q)
        return Monomial(p, q.concat(loop))


def iso_witness_check(
    g: Graph,
    block: MatrixBlock,
    len_bound: int,
    context: Optional[LpaContext] = None,
) -> WitnessReport:
    """
    Verify the block's isomorphism on generating monomials up to len_bound.

    Checks, per generator: the map is well defined on its normal form and
    grading matches entry_degree; per pair: multiplicativity; overall: the
    normal forms of the generators are linearly independent.
    """
    context = context or LpaContext.for_graph(g, rewrite_bound=max(2 * len_bound + 2, 32))
    witness = WitnessMap(context, block)
    period = max(witness.cycle.length, 1)
    report = WitnessReport(block, len_bound)

    generators = witness.generators(len_bound)
    elements = []
    images = []
    independence = EchelonBasis()
    for gen in generators:
        element = LpaElement(context, {gen.monomial: Fraction(1)})
        image = GradedMatrix.unit(block, gen.i, gen.j, gen.k * period)
        elements.append(element)
        images.append(image)
        report.checked_monomials += 1

        if witness.image(element) != image:
            report.add_violation(f"well-definedness: image of {gen.label()} differs from e_{gen.i + 1}{gen.j + 1}")
        try:
            expected = entry_degree(block, gen.i + 1, gen.j + 1, gen.k * period)
        except GradingError as e:
            report.add_violation(f"grading: {gen.label()}: {e}")
        else:
            if gen.monomial.degree != expected:
                report.add_violation(
                    f"grading: {gen.label()} has degree {gen.monomial.degree} "
                    f"but its matrix unit has degree {expected}"
                )
        if independence.insert({m: c for m, c in element.items()}) is None:
            report.add_violation(f"independence: {gen.label()} is dependent on earlier generators")

    for x, image_x in zip(elements, images):
        for y, image_y in zip(elements, images):
            report.checked_pairs += 1
            if witness.image(x * y) != image_x @ image_y:
                report.add_violation(f"multiplicativity: ({x}) * ({y})")

    logger.info(
        f"[WITNESS] graph={g.name} generators={report.checked_monomials} "
        f"pairs={report.checked_pairs} violations={len(report.violations)}"
    )
    return report
