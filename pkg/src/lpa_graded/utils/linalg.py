"""
Sparse exact linear algebra over the rationals.

SparseVector is a dictionary key -> Fraction with zero entries removed; it
is the coefficient container for algebra elements, module vectors and
flattened operators. EchelonBasis keeps an incrementally reduced basis so
that rank and span-membership questions are answered exactly.
"""

from fractions import Fraction
from typing import Any, Dict, Hashable, Iterable, List, Optional, Tuple, Union

Scalar = Fraction
ScalarLike = Union[int, Fraction]


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int or Fraction to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"scalars must be int or Fraction, got {type(value).__name__}")
    return Fraction(value)


class SparseVector(dict):
    """Dictionary of nonzero Fraction coefficients supporting vector-space operations."""

    def __init__(self, data: Any = ()):
        super().__init__()
        if isinstance(data, dict):
            data = data.items()
        self.__iadd__(data)

    def __getitem__(self, key):
        return self.get(key, Fraction(0))

    def iadd_coef(self, coef: ScalarLike, other: Dict) -> "SparseVector":
        """self += coef * other"""
        if coef == 0:
            return self
        for key, value in other.items():
            total = self.get(key, 0) + coef * value
            if total == 0:
                self.pop(key, None)
            else:
                dict.__setitem__(self, key, as_scalar(total))
        return self

    def __iadd__(self, other):
        items = other.items() if isinstance(other, dict) else other
        for key, value in items:
            if value == 0:
                continue
            total = self.get(key, 0) + as_scalar(value)
            if total == 0:
                self.pop(key, None)
            else:
                dict.__setitem__(self, key, total)
        return self

    def __add__(self, other) -> "SparseVector":
        result = SparseVector(self)
        result += other
        return result

    def __sub__(self, other) -> "SparseVector":
        result = SparseVector(self)
        result.iadd_coef(-1, other)
        return result

    def __neg__(self) -> "SparseVector":
        return SparseVector((k, -v) for k, v in self.items())

    def scaled(self, coef: ScalarLike) -> "SparseVector":
        if coef == 0:
            return SparseVector()
        return SparseVector((k, coef * v) for k, v in self.items())


class EchelonBasis:
    """Incrementally reduced row basis; answers rank and membership exactly."""

    def __init__(self):
        self._rows: List[Tuple[Hashable, SparseVector]] = []

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Dict) -> SparseVector:
        """Return the remainder of vector after elimination against the basis."""
        remainder = SparseVector(vector)
        for pivot, row in self._rows:
            coef = remainder.get(pivot)
            if coef:
                remainder.iadd_coef(-coef, row)
        return remainder

    def insert(self, vector: Dict) -> Optional[SparseVector]:
        """Add vector to the span; returns the new reduced row or None if dependent."""
        remainder = self.reduce(vector)
        if not remainder:
            return None
        pivot = next(iter(remainder))
        remainder = remainder.scaled(1 / remainder[pivot])
        self._rows.append((pivot, remainder))
        return remainder

    def contains(self, vector: Dict) -> bool:
        return not self.reduce(vector)


def rank_of(vectors: Iterable[Dict]) -> int:
    """Exact rank of a family of sparse vectors."""
    basis = EchelonBasis()
    for vector in vectors:
        basis.insert(vector)
    return basis.rank


def apply_operator(operator: Dict[Hashable, Dict[Hashable, Fraction]], vector: Dict) -> SparseVector:
    """Apply a column-sparse operator {input: {output: coef}} to a sparse vector."""
    result = SparseVector()
    for key, coef in vector.items():
        column = operator.get(key)
        if column:
            result.iadd_coef(coef, column)
    return result


def compose_operators(
    left: Dict[Hashable, Dict[Hashable, Fraction]],
    right: Dict[Hashable, Dict[Hashable, Fraction]],
) -> Dict[Hashable, SparseVector]:
    """Operator product left ∘ right in column-sparse form."""
    result: Dict[Hashable, SparseVector] = {}
    for key, column in right.items():
        image = apply_operator(left, column)
        if image:
            result[key] = image
    return result
