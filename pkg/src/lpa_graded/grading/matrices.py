"""
Graded matrix algebras M_n(A)(δ_1, ..., δ_n) with A = K or K[x^m, x^-m].

A matrix unit e_ij(x^k) has degree k + δ_i - δ_j.
"""

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from ..domain.graph import Path
from ..utils.errors import GradingError
from ..utils.linalg import ScalarLike, SparseVector, as_scalar


class BaseKind(Enum):
    """Base ring of a matrix block."""
    FIELD = "field"
    LAURENT = "laurent"


class AnchorKind(Enum):
    SINK = "sink"
    CYCLE = "cycle"


@dataclass(frozen=True)
class MatrixBlock:
    """
    One graded matrix summand.

    For a finite index the gradings are the lengths of the indexing paths;
    for an infinite index they are a sample of those lengths up to `bound`.
    """

    base: BaseKind
    period: int
    gradings: Tuple[int, ...]
    anchor_kind: AnchorKind
    anchor_vertex: str
    anchor_cycle: Tuple[str, ...] = ()
    infinite: bool = False
    bound: Optional[int] = None
    paths: Tuple[Path, ...] = field(default=(), compare=False)

    @property
    def size(self) -> Optional[int]:
        return None if self.infinite else len(self.gradings)

    def ring(self) -> str:
        if self.base is BaseKind.FIELD:
            return "K"
        if self.period == 1:
            return "K[x,x^-1]"
        return f"K[x^{self.period},x^-{self.period}]"

    def describe(self) -> str:
        """Text form, e.g. M_3(K[x,x^-1])(0,1,2)."""
        if self.infinite:
            sample = ",".join(str(d) for d in self.gradings)
            return f"M_inf({self.ring()})({sample},...; bound {self.bound})"
        return f"M_{len(self.gradings)}({self.ring()})({','.join(str(d) for d in self.gradings)})"

    def to_dict(self) -> Dict[str, Any]:
        base: Dict[str, Any] = {"kind": self.base.value}
        if self.base is BaseKind.LAURENT:
            base["period"] = self.period
        if self.infinite:
            index = {"kind": "infinite", "sample": list(self.gradings), "bound": self.bound}
        else:
            index = {"kind": "finite", "gradings": list(self.gradings)}
        anchor: Dict[str, Any] = {"kind": self.anchor_kind.value, "vertex": self.anchor_vertex}
        if self.anchor_kind is AnchorKind.CYCLE:
            anchor["cycle"] = list(self.anchor_cycle)
        return {"base": base, "index": index, "anchor": anchor}


def check_exponent(block: MatrixBlock, xdeg: int) -> None:
    if block.base is BaseKind.FIELD and xdeg != 0:
        raise GradingError(f"field base admits only constant entries, got x^{xdeg}")
    if block.base is BaseKind.LAURENT and xdeg % block.period != 0:
        raise GradingError(f"exponent {xdeg} is not a multiple of the period {block.period}")


def entry_degree(block: MatrixBlock, i: int, j: int, xdeg: int) -> int:
    """deg e_ij(x^xdeg) = xdeg + δ_i - δ_j, indices 1-based."""
    n = len(block.gradings)
    for index in (i, j):
        if not 1 <= index <= n:
            raise GradingError(f"index {index} out of range 1..{n}")
    check_exponent(block, xdeg)
    return xdeg + block.gradings[i - 1] - block.gradings[j - 1]


class GradedMatrix:
    """
    Sparse n x n matrix over K or K[x^m, x^-m].

    Entries map (i, j) (0-based) to a Laurent polynomial stored as
    exponent -> coefficient.
    """

    __slots__ = ("size", "base", "period", "entries")

    def __init__(self, size: int, base: BaseKind = BaseKind.FIELD, period: int = 1, entries=None):
        self.size = size
        self.base = base
        self.period = period
        self.entries: Dict[Tuple[int, int], SparseVector] = {}
        for (i, j), poly in (entries or {}).items():
            self._accumulate(i, j, poly)

    @classmethod
    def for_block(cls, block: MatrixBlock) -> "GradedMatrix":
        return cls(len(block.gradings), block.base, block.period)

    @classmethod
    def unit(cls, block: MatrixBlock, i: int, j: int, exponent: int = 0, coef: ScalarLike = 1) -> "GradedMatrix":
        """coef * e_ij(x^exponent), indices 0-based."""
        matrix = cls.for_block(block)
        matrix._accumulate(i, j, {exponent: as_scalar(coef)})
        return matrix

    def _accumulate(self, i: int, j: int, poly: Dict[int, Fraction]) -> None:
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise GradingError(f"entry ({i}, {j}) out of range for size {self.size}")
        for exponent in poly:
            if self.base is BaseKind.FIELD and exponent != 0:
                raise GradingError(f"field base admits only constant entries, got x^{exponent}")
            if exponent % self.period != 0:
                raise GradingError(f"exponent {exponent} is not a multiple of the period {self.period}")
        entry = self.entries.get((i, j), SparseVector())
        entry += poly
        if entry:
            self.entries[(i, j)] = entry
        else:
            self.entries.pop((i, j), None)

    def _compatible(self, other: "GradedMatrix") -> None:
        if (self.size, self.base, self.period) != (other.size, other.base, other.period):
            raise GradingError("matrices over different graded algebras")

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._compatible(other)
        result = GradedMatrix(self.size, self.base, self.period, self.entries)
        for (i, j), poly in other.entries.items():
            result._accumulate(i, j, poly)
        return result

    def scaled(self, coef: ScalarLike) -> "GradedMatrix":
        coef = as_scalar(coef)
        return GradedMatrix(
            self.size, self.base, self.period,
            {key: poly.scaled(coef) for key, poly in self.entries.items()},
        )

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._compatible(other)
        by_row: Dict[int, Dict[int, SparseVector]] = {}
        for (k, j), poly in other.entries.items():
            by_row.setdefault(k, {})[j] = poly
        result = GradedMatrix(self.size, self.base, self.period)
        for (i, k), left in self.entries.items():
            for j, right in by_row.get(k, {}).items():
                product = SparseVector()
                for a, ca in left.items():
                    for b, cb in right.items():
                        product.iadd_coef(ca * cb, {a + b: Fraction(1)})
                result._accumulate(i, j, product)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (self.size, self.base, self.period) == (other.size, other.base, other.period) and {
            k: dict(v) for k, v in self.entries.items()
        } == {k: dict(v) for k, v in other.entries.items()}

    def __hash__(self) -> int:
        return hash((self.size, frozenset((k, frozenset(v.items())) for k, v in self.entries.items())))

    def is_zero(self) -> bool:
        return not self.entries

    def degrees(self, gradings: Tuple[int, ...]) -> set:
        return {
            exponent + gradings[i] - gradings[j]
            for (i, j), poly in self.entries.items()
            for exponent in poly
        }

    def homogeneous_degree(self, gradings: Tuple[int, ...]) -> Optional[int]:
        """The common degree of every nonzero entry, or None if mixed or zero."""
        degrees = self.degrees(gradings)
        return degrees.pop() if len(degrees) == 1 else None

    def __repr__(self) -> str:
        terms = []
        for (i, j), poly in sorted(self.entries.items()):
            for exponent, coef in sorted(poly.items()):
                terms.append(f"{coef}*e{i + 1}{j + 1}(x^{exponent})")
        return "GradedMatrix(" + (" + ".join(terms) or "0") + ")"


def random_block(rng: random.Random, max_size: int = 5, max_grading: int = 4) -> MatrixBlock:
    """Random finite block over K or K[x^t, x^-t] with nondecreasing gradings."""
    size = rng.randint(1, max_size)
    gradings = tuple(sorted(rng.randint(0, max_grading) for _ in range(size)))
    if rng.random() < 0.5:
        return MatrixBlock(BaseKind.FIELD, 1, gradings, AnchorKind.SINK, "w")
    return MatrixBlock(BaseKind.LAURENT, rng.randint(1, 4), gradings, AnchorKind.CYCLE, "c", anchor_cycle=("c",))


def random_homogeneous_matrix(
    block: MatrixBlock,
    rng: random.Random,
    max_terms: int = 4,
    coefficients: Tuple[ScalarLike, ...] = (1, 2, 3, Fraction(1, 2)),
) -> Tuple[GradedMatrix, int]:
    """
    Nonzero sum of units e_ij(x^k) sharing one degree; returns (matrix, degree).

    Coefficients are positive, so terms never cancel.
    """
    n = len(block.gradings)
    step = 0 if block.base is BaseKind.FIELD else block.period
    i, j = rng.randrange(n), rng.randrange(n)
    exponent = step * rng.randint(-2, 2)
    degree = entry_degree(block, i + 1, j + 1, exponent)
    matrix = GradedMatrix.unit(block, i, j, exponent, rng.choice(coefficients))
    for _ in range(rng.randint(0, max_terms - 1)):
        i, j = rng.randrange(n), rng.randrange(n)
        exponent = degree - block.gradings[i] + block.gradings[j]
        if (step == 0 and exponent != 0) or (step and exponent % step):
            continue
        matrix = matrix + GradedMatrix.unit(block, i, j, exponent, rng.choice(coefficients))
    return matrix, degree
