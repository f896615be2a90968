"""
Exact arithmetic in the Leavitt path algebra L_K(E) over the rationals.

Elements are finite sums of monomials p q* with r(p) = r(q). Products use
the relations v w = δ v, e* f = δ r(e); the canonical form eliminates the
special edge pair e e* at each regular vertex using
e e* = s(e) - Σ_{f ≠ e} f f*.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from ..domain.graph import Graph, Path
from ..utils.errors import GraphMismatchError, GraphValidationError, PathLengthExceeded
from ..utils.linalg import ScalarLike, SparseVector, as_scalar

logger = logging.getLogger(__name__)

DEFAULT_REWRITE_BOUND = 32


@dataclass(frozen=True)
class SpecialEdgeChoice:
    """One chosen out-edge per regular vertex."""

    graph: Graph
    choices: Tuple[Tuple[str, str], ...]
    _by_vertex: Dict[str, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_vertex = dict(self.choices)
        for vertex in self.graph.vertices:
            out = self.graph.out_edges(vertex)
            chosen = by_vertex.get(vertex)
            if not out:
                if chosen is not None:
                    raise GraphValidationError(f"sink {vertex} has no special edge", "special_edges")
                continue
            if chosen is None:
                raise GraphValidationError(f"regular vertex {vertex} lacks a special edge", "special_edges")
            if self.graph.edge(chosen).source != vertex:
                raise GraphValidationError(
                    f"special edge {chosen} is not emitted by {vertex}", "special_edges"
                )
        object.__setattr__(self, "_by_vertex", by_vertex)

    @classmethod
    def default(cls, graph: Graph) -> "SpecialEdgeChoice":
        """First-declared out-edge of every regular vertex."""
        return cls.from_mapping(graph, {})

    @classmethod
    def from_mapping(cls, graph: Graph, overrides: Mapping[str, str]) -> "SpecialEdgeChoice":
        """Defaults overridden per vertex."""
        for vertex in overrides:
            graph.require_vertex(vertex)
        choices = []
        for vertex in graph.vertices:
            out = graph.out_edges(vertex)
            if vertex in overrides:
                choices.append((vertex, overrides[vertex]))
            elif out:
                choices.append((vertex, out[0].id))
        return cls(graph, tuple(choices))

    def __getitem__(self, vertex: str) -> str:
        return self._by_vertex[vertex]

    def is_special(self, edge_id: str) -> bool:
        return self._by_vertex.get(self.graph.edge(edge_id).source) == edge_id

    def to_dict(self) -> Dict[str, str]:
        return dict(self.choices)


@dataclass(frozen=True)
class Monomial:
    """p q* with r(p) = r(q)."""

    p: Path
    q: Path

    def __post_init__(self):
        if self.p.end != self.q.end:
            raise GraphValidationError(
                f"monomial needs r(p) = r(q), got {self.p.end} and {self.q.end}", "edges"
            )

    @property
    def degree(self) -> int:
        return len(self.p.edges) - len(self.q.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.p.edges and not self.q.edges

    @property
    def length(self) -> int:
        return len(self.p.edges) + len(self.q.edges)

    def star(self) -> "Monomial":
        return Monomial(self.q, self.p)

    def sort_key(self) -> Tuple:
        return (self.degree, self.p.start, self.p.edges, self.q.start, self.q.edges)

    def __str__(self) -> str:
        if self.is_vertex:
            return self.p.start
        parts = list(self.p.edges) + [f"{e}^*" for e in reversed(self.q.edges)]
        return " ".join(parts)


def multiply_monomials(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """(p q*)(r s*) before normalization; None when the relations force 0."""
    q, r = a.q, b.p
    if q.is_prefix_of(r):
        return Monomial(a.p.concat(r.remainder_after(q)), b.q)
    if r.is_prefix_of(q):
        return Monomial(a.p, b.q.concat(q.remainder_after(r)))
    return None


@dataclass(frozen=True)
class LpaContext:
    """Graph, special-edge choice and rewrite bound shared by a family of elements."""

    graph: Graph
    special: SpecialEdgeChoice
    rewrite_bound: int = DEFAULT_REWRITE_BOUND

    @classmethod
    def for_graph(
        cls,
        graph: Graph,
        special_edges: Optional[Mapping[str, str]] = None,
        rewrite_bound: int = DEFAULT_REWRITE_BOUND,
    ) -> "LpaContext":
        special = SpecialEdgeChoice.from_mapping(graph, special_edges or {})
        return cls(graph, special, rewrite_bound)

    def check_length(self, m: Monomial) -> Monomial:
        longest = max(len(m.p.edges), len(m.q.edges))
        if longest > self.rewrite_bound:
            raise PathLengthExceeded(
                f"path of length {longest} exceeds the rewrite bound {self.rewrite_bound}"
            )
        return m

    def reduction(self, m: Monomial) -> Optional[SparseVector]:
        """One rewrite of m, or None when m is a basis monomial."""
        if not m.p.edges or not m.q.edges:
            return None
        e = m.p.edges[-1]
        if e != m.q.edges[-1] or not self.special.is_special(e):
            return None
        v = self.graph.edge(e).source
        p_head = Path(m.p.start, m.p.edges[:-1], v)
        q_head = Path(m.q.start, m.q.edges[:-1], v)
        rewritten = SparseVector({Monomial(p_head, q_head): Fraction(1)})
        for f in self.graph.out_edges(v):
            if f.id != e:
                tail = Path(v, (f.id,), f.range)
                rewritten.iadd_coef(-1, {Monomial(p_head.concat(tail), q_head.concat(tail)): Fraction(1)})
        return rewritten

    def is_basis_monomial(self, m: Monomial) -> bool:
        return self.reduction(m) is None

    def normalize(self, terms: Mapping[Monomial, Fraction], rng: Optional[random.Random] = None) -> SparseVector:
        """
        Rewrite to the canonical basis.

        Each monomial admits at most one rewrite (at its last edge), so any
        processing order reaches the same result; `rng` picks a random order.
        """
        pending = SparseVector(terms)
        result = SparseVector()
        while pending:
            m = rng.choice(list(pending)) if rng is not None else next(iter(pending))
            coef = pending.pop(m)
            rewritten = self.reduction(m)
            if rewritten is None:
                result.iadd_coef(coef, {m: Fraction(1)})
            else:
                pending.iadd_coef(coef, rewritten)
        return result

    def element(self, terms: Mapping[Monomial, ScalarLike]) -> "LpaElement":
        return LpaElement(self, terms)

    def zero(self) -> "LpaElement":
        return LpaElement(self, {})

    def vertex(self, v: str) -> "LpaElement":
        path = self.graph.vertex_path(v)
        return LpaElement(self, {Monomial(path, path): 1})

    def edge(self, e: str) -> "LpaElement":
        p = self.graph.path(e)
        return LpaElement(self, {Monomial(p, self.graph.vertex_path(p.end)): 1})

    def ghost(self, e: str) -> "LpaElement":
        return self.edge(e).star()

    def path(self, *edge_ids: str) -> "LpaElement":
        p = self.graph.path(*edge_ids)
        return LpaElement(self, {Monomial(p, self.graph.vertex_path(p.end)): 1})

    def monomial(self, p: Path, q: Path, coef: ScalarLike = 1) -> "LpaElement":
        return LpaElement(self, {Monomial(p, q): coef})

    def one(self) -> "LpaElement":
        """Σ v over all vertices, the unit of L_K(E)."""
        total = self.zero()
        for v in self.graph.vertices:
            total = total + self.vertex(v)
        return total

    def generator(self, name: str, starred: bool = False) -> "LpaElement":
        """Vertex, edge or ghost edge by identifier."""
        if self.graph.has_vertex(name):
            return self.vertex(name)
        if self.graph.has_edge(name):
            return self.ghost(name) if starred else self.edge(name)
        raise GraphValidationError(f"unknown identifier {name}", "edges")


class LpaElement:
    """A finite rational combination of basis monomials, kept in canonical form."""

    __slots__ = ("context", "_terms")

    def __init__(
        self,
        context: LpaContext,
        terms: Mapping[Monomial, ScalarLike],
        normalized: bool = False,
    ):
        self.context = context
        vector = SparseVector((context.check_length(m), as_scalar(c)) for m, c in terms.items())
        self._terms = vector if normalized else context.normalize(vector)

    @property
    def graph(self) -> Graph:
        return self.context.graph

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return {m: self._terms[m] for m in self.monomials()}

    def monomials(self) -> List[Monomial]:
        """Support in canonical order."""
        return sorted(self._terms, key=Monomial.sort_key)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms[m]

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        for m in self.monomials():
            yield m, self._terms[m]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check_context(self, other: "LpaElement") -> None:
        if other.context is not self.context and other.context != self.context:
            raise GraphMismatchError(
                f"elements over different graphs or special-edge choices: "
                f"{self.graph.name} and {other.graph.name}"
            )

    def _wrap(self, vector: SparseVector, normalized: bool = True) -> "LpaElement":
        return LpaElement(self.context, vector, normalized=normalized)

    def __add__(self, other: "LpaElement") -> "LpaElement":
        if not isinstance(other, LpaElement):
            return NotImplemented
        self._check_context(other)
        return self._wrap(self._terms + other._terms)

    def __sub__(self, other: "LpaElement") -> "LpaElement":
        if not isinstance(other, LpaElement):
            return NotImplemented
        self._check_context(other)
        return self._wrap(self._terms - other._terms)

    def __neg__(self) -> "LpaElement":
        return self._wrap(-self._terms)

    def scaled(self, coef: ScalarLike) -> "LpaElement":
        return self._wrap(self._terms.scaled(as_scalar(coef)))

    def __mul__(self, other):
        if isinstance(other, LpaElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scaled(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LpaElement):
            return NotImplemented
        return self.context == other.context and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def star(self) -> "LpaElement":
        return involute(self)

    def degrees(self) -> List[int]:
        return sorted({m.degree for m in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a nonzero homogeneous element."""
        degrees = self.degrees()
        if len(degrees) != 1:
            raise ValueError(f"element is not homogeneous of a single degree: degrees {degrees}")
        return degrees[0]

    def homogeneous_part(self, n: int) -> "LpaElement":
        return homogeneous_part(self, n)

    def normal_form(self, rng: Optional[random.Random] = None) -> "LpaElement":
        return normal_form(self, rng)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"LpaElement({self.graph.name}: {format_element(self)})"


def _format_coefficient(coef: Fraction) -> str:
    if coef.denominator == 1:
        return str(coef.numerator)
    return f"{coef.numerator}/{coef.denominator}"


def format_element(a: LpaElement) -> str:
    """Canonical printing: terms in monomial order, reduced fractions, `^*` for stars."""
    if a.is_zero():
        return "0"
    out = []
    for i, (m, coef) in enumerate(a.items()):
        sign = "-" if coef < 0 else "+"
        magnitude = abs(coef)
        body = str(m) if magnitude == 1 else f"{_format_coefficient(magnitude)}*{m}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def multiply(a: LpaElement, b: LpaElement) -> LpaElement:
    """Bilinear product followed by normalization."""
    a._check_context(b)
    product = SparseVector()
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            m = multiply_monomials(m1, m2)
            if m is not None:
                product.iadd_coef(c1 * c2, {a.context.check_length(m): Fraction(1)})
    return LpaElement(a.context, product)


def normal_form(a: LpaElement, rng: Optional[random.Random] = None) -> LpaElement:
    """Canonical representative; `rng` randomizes the rewrite order."""
    return LpaElement(a.context, a.context.normalize(a._terms, rng), normalized=True)


def degree(m: Monomial) -> int:
    return m.degree


def homogeneous_part(a: LpaElement, n: int) -> LpaElement:
    return LpaElement(
        a.context, {m: c for m, c in a._terms.items() if m.degree == n}, normalized=True
    )


def homogeneous_components(a: LpaElement) -> Dict[int, LpaElement]:
    return {n: homogeneous_part(a, n) for n in a.degrees()}


def involute(a: LpaElement) -> LpaElement:
    """(p q*)* = q p*, extended linearly."""
    return LpaElement(a.context, {m.star(): c for m, c in a._terms.items()})


def random_element(
    context: LpaContext,
    rng: random.Random,
    max_terms: int = 3,
    max_len: int = 2,
    coefficients: Iterable[int] = (-2, -1, 1, 2, 3),
) -> LpaElement:
    """Random combination of monomials with paths of length <= max_len."""
    coefficients = list(coefficients)
    terms: Dict[Monomial, int] = {}
    for _ in range(rng.randint(1, max_terms)):
        m = random_monomial(context.graph, rng, max_len)
        terms[m] = terms.get(m, 0) + rng.choice(coefficients)
    return LpaElement(context, terms)


def random_monomial(graph: Graph, rng: random.Random, max_len: int = 2) -> Monomial:
    end = rng.choice(graph.vertices)
    return Monomial(_random_path_into(graph, end, rng, max_len), _random_path_into(graph, end, rng, max_len))


def _random_path_into(graph: Graph, end: str, rng: random.Random, max_len: int) -> Path:
    edges: List[str] = []
    current = end
    for _ in range(rng.randint(0, max_len)):
        incoming = graph.in_edges(current)
        if not incoming:
            break
        e = rng.choice(incoming)
        edges.append(e.id)
        current = e.source
    return Path(current, tuple(reversed(edges)), end)
