"""
Rational infinite paths μ c c c ... and tail equivalence.
"""

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Optional

from ..domain.graph import Graph, Path
from ..utils.errors import GraphMismatchError, GraphValidationError


@dataclass(frozen=True)
class Lasso:
    """Prefix path followed by a closed path repeated forever."""

    graph: Graph
    prefix: Path
    loop: Path

    def __post_init__(self):
        if not self.loop.edges or self.loop.start != self.loop.end:
            raise GraphValidationError("lasso loop must be a closed path of positive length", "edges")
        if self.prefix.end != self.loop.start:
            raise GraphValidationError(
                f"lasso prefix ends at {self.prefix.end} but the loop starts at {self.loop.start}", "edges"
            )

    @classmethod
    def of(cls, graph: Graph, prefix: Iterable[str], loop: Iterable[str], start: Optional[str] = None) -> "Lasso":
        """Build from edge ids; an empty prefix starts at the loop's base."""
        prefix = tuple(prefix)
        loop_path = graph.path(*loop)
        if prefix:
            prefix_path = graph.path(*prefix)
        else:
            prefix_path = graph.vertex_path(start or loop_path.start)
        return cls(graph, prefix_path, loop_path)

    def edge_at(self, i: int) -> str:
        """The i-th edge (0-based) of the infinite path."""
        if i < 0:
            raise IndexError(i)
        head = len(self.prefix.edges)
        if i < head:
            return self.prefix.edges[i]
        return self.loop.edges[(i - head) % len(self.loop.edges)]

    def is_rational(self) -> bool:
        return True

    def label(self) -> str:
        prefix = " ".join(self.prefix.edges) or self.prefix.start
        return f"{prefix} ({' '.join(self.loop.edges)})^inf"


def tail_equivalent(a: Lasso, b: Lasso) -> bool:
    """
    True iff the infinite edge sequences agree after some shifts.

    Both are eventually periodic, so agreement over a window of
    |μ_a| + |μ_b| + |c_a| + |c_b| + lcm(|c_a|, |c_b|) at some pair of offsets
    below that window decides equivalence.
    """
    if a.graph != b.graph:
        raise GraphMismatchError(f"lassos over different graphs: {a.graph.name} and {b.graph.name}")
    la, lb = len(a.loop.edges), len(b.loop.edges)
    window = len(a.prefix.edges) + len(b.prefix.edges) + la + lb + lcm(la, lb)
    for i in range(window):
        for j in range(window):
            if all(a.edge_at(i + t) == b.edge_at(j + t) for t in range(window)):
                return True
    return False
