"""
Property functions behind the self-check suites.

Each property takes the suite's `params` mapping and a seeded random
generator and returns a PropertyResult.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Mapping

import networkx as nx

from ..algebra.terms import LpaContext, Monomial, random_element, random_monomial
from ..domain.graph import Graph, Path
from ..domain.structure import (
    classify_vertices,
    closure_trace,
    graphs_isomorphic,
    hereditary_saturated_closure,
    hsat_subsets_bruteforce,
    is_downward_directed,
    is_hereditary,
    is_saturated,
    no_exit_cycles,
    quotient_graph,
    simple_cycles,
)
from ..grading.decompositions import DEFAULT_MAX_PATH_LEN, acyclic_decomposition, graded_socle
from ..grading.matrices import random_block, random_homogeneous_matrix
from ..grading.witness import iso_witness_check
from ..ingest.corpus import (
    gn,
    parse_corpus_spec,
    random_graph,
    random_single_sink_graph,
)
from ..ingest.parsers import parse_graph, serialize
from ..modules.lasso import Lasso, tail_equivalent
from ..modules.sink import build_sink_module, check_module_relations, direct_sum, graded_simplicity_oracle
from .classifier import (
    count_graded_simple_classes,
    graded_naimark,
    layer_descriptions,
    necessary_conditions,
    socular_chain,
)

DEFAULT_CORPUS = (
    "loop",
    "line:3",
    "rose:2",
    "G1",
    "G2",
    "G3",
    "Gn:4",
    "staircase:2",
    "tworow_comet:2",
    "twosinks",
    "figure8",
)

MAX_RECORDED_VIOLATIONS = 20


@dataclass
class PropertyResult:
    checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def expect(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition and len(self.violations) < MAX_RECORDED_VIOLATIONS:
            self.violations.append(message)


def _corpus(params: Mapping[str, Any]) -> List[Graph]:
    return [parse_corpus_spec(spec) for spec in params.get("corpus", DEFAULT_CORPUS)]


def _random_graphs(params: Mapping[str, Any], rng: random.Random, acyclic: bool = False) -> Iterable[Graph]:
    count = int(params.get("graphs", 20))
    max_vertices = int(params.get("max_vertices", 6))
    for i in range(count):
        yield random_graph(rng, max_vertices, acyclic=acyclic, name=f"random_{i}")


def _random_subset(g: Graph, rng: random.Random) -> List[str]:
    return [v for v in g.vertices if rng.random() < 0.3]


def closure_oracle(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """The closure equals the least hereditary saturated superset found by enumeration."""
    result = PropertyResult()
    subsets_per_graph = int(params.get("subsets", 50))
    for g in _random_graphs(params, rng):
        hsat = hsat_subsets_bruteforce(g)
        for _ in range(subsets_per_graph):
            X = frozenset(_random_subset(g, rng))
            expected = frozenset(g.vertices)
            for H in hsat:
                if X <= H.members:
                    expected &= H.members
            actual = hereditary_saturated_closure(g, X)
            result.expect(actual == expected, f"{serialize(g)!r}: closure of {sorted(X)} is {actual!r}")
    return result


def closure_laws(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """Extensive, idempotent, monotone; the trace grows, ends at the closure and saturates only regular vertices."""
    result = PropertyResult()
    for g in _random_graphs(params, rng):
        X = _random_subset(g, rng)
        Y = X + _random_subset(g, rng)
        cl_x = hereditary_saturated_closure(g, X)
        cl_y = hereditary_saturated_closure(g, Y)
        name = serialize(g)
        result.expect(set(X) <= cl_x.members, f"{name!r}: not extensive on {X}")
        result.expect(hereditary_saturated_closure(g, cl_x) == cl_x, f"{name!r}: not idempotent on {X}")
        result.expect(cl_x <= cl_y, f"{name!r}: not monotone on {X} <= {Y}")
        result.expect(is_hereditary(g, cl_x) and is_saturated(g, cl_x), f"{name!r}: closure of {X} not hsat")
        trace = closure_trace(g, X)
        result.expect(
            all(a <= b for a, b in zip(trace, trace[1:])) and trace[-1] == cl_x,
            f"{name!r}: closure trace of {X} is not an increasing chain ending at the closure",
        )
        saturated = trace[-1].members - trace[0].members
        result.expect(
            all(g.is_regular(v) for v in saturated),
            f"{name!r}: saturation of {X} added a vertex that is not regular",
        )
    return result


def downward_directed_oracle(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """Agrees with pairwise descendant intersection computed by networkx."""
    result = PropertyResult()
    for g in list(_random_graphs(params, rng)) + _corpus(params):
        nxg = g.to_networkx()
        reach = {v: nx.descendants(nxg, v) | {v} for v in g.vertices}
        expected = all(reach[u] & reach[v] for u in g.vertices for v in g.vertices)
        result.expect(is_downward_directed(g).holds == expected, f"{g.name}: directedness mismatch")
    return result


def cycle_exits(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """Exits are exactly the out-edges of cycle vertices not on the cycle."""
    result = PropertyResult()
    for g in list(_random_graphs(params, rng)) + _corpus(params):
        profiles = classify_vertices(g)
        no_exit_vertices = set()
        for record in simple_cycles(g):
            on_cycle = set(record.cycle.edges)
            expected = {
                e.id for v in record.cycle.vertices(g) for e in g.out_edges(v) if e.id not in on_cycle
            }
            result.expect(set(record.exits) == expected, f"{g.name}: exits of {record.cycle.edges}")
            if not record.exits:
                no_exit_vertices.update(record.cycle.vertices(g))
        actual = {v for v, p in profiles.items() if p.on_no_exit_cycle}
        result.expect(actual == no_exit_vertices, f"{g.name}: no-exit cycle vertices {sorted(actual)}")
    return result


def quotient_laws(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """E∖H keeps the vertices outside H and the edges ranging outside H."""
    result = PropertyResult()
    for g in _random_graphs(params, rng):
        H = hereditary_saturated_closure(g, _random_subset(g, rng))
        q = quotient_graph(g, H)
        result.expect(set(q.vertices) == set(g.vertices) - H.members, f"{g.name}: quotient vertices")
        result.expect(
            {e.id for e in q.edges} == {e.id for e in g.edges if e.range not in H},
            f"{g.name}: quotient edges",
        )
        result.expect(
            all(q.is_regular(v) for v in q.vertices if g.is_regular(v)),
            f"{g.name}: saturation left a regular vertex without edges",
        )
        result.expect(quotient_graph(g, []) is g, f"{g.name}: empty quotient is not the graph itself")
    return result


def cuntz_krieger_relations(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """Relations (1)-(4) hold on every pair of generators."""
    result = PropertyResult()
    for g in _corpus(params):
        ctx = LpaContext.for_graph(g)
        zero = ctx.zero()
        for v in g.vertices:
            for w in g.vertices:
                expected = ctx.vertex(v) if v == w else zero
                result.expect(ctx.vertex(v) * ctx.vertex(w) == expected, f"{g.name}: relation (1) {v}{w}")
        for e in g.edges:
            edge, ghost = ctx.edge(e.id), ctx.ghost(e.id)
            result.expect(
                ctx.vertex(e.source) * edge == edge and edge * ctx.vertex(e.range) == edge,
                f"{g.name}: relation (2) for {e.id}",
            )
            result.expect(
                ctx.vertex(e.range) * ghost == ghost and ghost * ctx.vertex(e.source) == ghost,
                f"{g.name}: relation (2) for {e.id}^*",
            )
            for f in g.edges:
                expected = ctx.vertex(e.range) if e.id == f.id else zero
                result.expect(ghost * ctx.edge(f.id) == expected, f"{g.name}: relation (3) {e.id}^* {f.id}")
        for v in g.vertices:
            if g.is_regular(v):
                total = zero
                for e in g.out_edges(v):
                    total = total + ctx.edge(e.id) * ctx.ghost(e.id)
                result.expect(total == ctx.vertex(v), f"{g.name}: relation (4) at {v}")
    return result


def _random_triples(params: Mapping[str, Any], rng: random.Random):
    triples = int(params.get("triples", 100))
    for g in _corpus(params):
        ctx = LpaContext.for_graph(g)
        for _ in range(triples):
            yield g, ctx, [random_element(ctx, rng) for _ in range(3)]


def associativity(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    result = PropertyResult()
    for g, _, (a, b, c) in _random_triples(params, rng):
        result.expect((a * b) * c == a * (b * c), f"{g.name}: ({a})({b})({c})")
    return result


def confluence(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """Random rewrite orders reach the canonical form."""
    result = PropertyResult()
    orders = int(params.get("orders", 100))
    for g in _corpus(params):
        ctx = LpaContext.for_graph(g)
        for _ in range(orders):
            terms: Dict[Monomial, Fraction] = {}
            for _ in range(rng.randint(1, 4)):
                m = random_monomial(g, rng, 3)
                terms[m] = terms.get(m, Fraction(0)) + rng.choice((-2, -1, 1, 2))
            result.expect(
                ctx.normalize(terms, random.Random(rng.random())) == ctx.normalize(terms),
                f"{g.name}: rewrite order changed the normal form of {terms}",
            )
    return result


def anti_multiplicativity(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """(ab)* = b* a*."""
    result = PropertyResult()
    for g, _, (a, b, _) in _random_triples(params, rng):
        result.expect((a * b).star() == b.star() * a.star(), f"{g.name}: ({a})({b})")
    return result


def grading_additivity(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """deg(ab) = deg(a) + deg(b) for nonzero products of monomials."""
    result = PropertyResult()
    pairs = int(params.get("pairs", 100))
    for g in _corpus(params):
        ctx = LpaContext.for_graph(g)
        for _ in range(pairs):
            m1, m2 = random_monomial(g, rng, 3), random_monomial(g, rng, 3)
            product = ctx.element({m1: 1}) * ctx.element({m2: 1})
            if product.is_zero():
                continue
            result.expect(
                product.degrees() == [m1.degree + m2.degree],
                f"{g.name}: degree of ({m1})({m2}) is {product.degrees()}",
            )
    return result


def matrix_grading_additivity(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """deg(AB) = deg(A) + deg(B) for homogeneous graded matrices over K and K[x^t, x^-t]."""
    result = PropertyResult()
    pairs = int(params.get("pairs", 20))
    for _ in range(int(params.get("blocks", 50))):
        block = random_block(rng, int(params.get("max_size", 5)))
        for _ in range(pairs):
            a, deg_a = random_homogeneous_matrix(block, rng)
            b, deg_b = random_homogeneous_matrix(block, rng)
            result.expect(
                a.homogeneous_degree(block.gradings) == deg_a,
                f"{block.describe()}: {a!r} is not of degree {deg_a}",
            )
            product = a @ b
            if product.is_zero():
                continue
            result.expect(
                product.degrees(block.gradings) == {deg_a + deg_b},
                f"{block.describe()}: ({a!r})({b!r}) has degrees {sorted(product.degrees(block.gradings))}",
            )
    return result


def socle_block_count(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """One block per sink and one per cycle without exits."""
    result = PropertyResult()
    bound = int(params.get("bound", DEFAULT_MAX_PATH_LEN))
    for g in list(_random_graphs(params, rng)) + _corpus(params):
        blocks = graded_socle(g, bound)
        expected = len(g.sinks()) + len(no_exit_cycles(g))
        result.expect(len(blocks) == expected, f"{g.name}: {len(blocks)} blocks, expected {expected}")
    return result


def witness_corpus(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """Exhaustive witness checks on small blocks."""
    result = PropertyResult()
    bound = int(params.get("bound", 6))
    random_bound = int(params.get("random_bound", 4))
    cases = []
    for name in params.get("corpus", ("G1", "loop")):
        g = parse_corpus_spec(name)
        cases.extend((g, block, bound) for block in graded_socle(g) if not block.infinite)
    for i in range(int(params.get("random_graphs", 3))):
        g = random_single_sink_graph(rng, int(params.get("max_vertices", 8)), name=f"random_dag_{i}")
        cases.append((g, acyclic_decomposition(g, g.sinks()[0]), random_bound))
    for g, block, len_bound in cases:
        report = iso_witness_check(g, block, len_bound)
        result.checked += report.checked_monomials + report.checked_pairs
        for violation in report.violations:
            result.expect(False, f"{g.name}: {violation}")
    return result


def sink_modules(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """Relations and graded simplicity of every finite sink module; N ⊕ N is not simple."""
    result = PropertyResult()
    max_dim = int(params.get("max_dim", 20))
    graphs = _corpus(params)
    for i in range(int(params.get("random_graphs", 5))):
        graphs.append(random_single_sink_graph(rng, int(params.get("max_vertices", 8)), name=f"random_dag_{i}"))
    for g in graphs:
        nxg = g.to_networkx()
        if not nx.is_directed_acyclic_graph(nxg):
            continue
        for w in g.sinks():
            module = build_sink_module(g, w)
            if module.dim > max_dim:
                continue
            relations = check_module_relations(module)
            result.expect(relations.passed, f"{g.name}: N_{w} {relations.first_violation}")
            result.expect(graded_simplicity_oracle(module), f"{g.name}: N_{w} is not graded simple")
            doubled = direct_sum(module, build_sink_module(g, w))
            result.expect(not graded_simplicity_oracle(doubled), f"{g.name}: N_{w} + N_{w} reported simple")
    return result


def _random_path_ending_at(g: Graph, end: str, rng: random.Random, max_len: int) -> Path:
    edges: List[str] = []
    current = end
    for _ in range(rng.randint(0, max_len)):
        incoming = g.in_edges(current)
        if not incoming:
            break
        e = rng.choice(incoming)
        edges.append(e.id)
        current = e.source
    return Path(current, tuple(reversed(edges)), end)


def _random_lasso(g: Graph, rng: random.Random) -> Lasso:
    record = rng.choice(simple_cycles(g))
    base = rng.choice(record.cycle.vertices(g))
    loop = record.cycle.rotated_to(g, base)
    if rng.random() < 0.3:
        loop = loop.concat(loop)
    return Lasso(g, _random_path_ending_at(g, base, rng, 3), loop)


def tail_equivalence_laws(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """Reflexive, symmetric, transitive; shifting into the loop preserves the class."""
    result = PropertyResult()
    samples = int(params.get("samples", 30))
    for g in _corpus(params):
        if not simple_cycles(g):
            continue
        for _ in range(samples):
            a, b, c = (_random_lasso(g, rng) for _ in range(3))
            result.expect(tail_equivalent(a, a), f"{g.name}: {a.label()} not reflexive")
            result.expect(tail_equivalent(a, b) == tail_equivalent(b, a), f"{g.name}: asymmetric")
            if tail_equivalent(a, b) and tail_equivalent(b, c):
                result.expect(tail_equivalent(a, c), f"{g.name}: not transitive")
            head = a.loop.edges[0]
            shifted = Lasso(
                g,
                a.prefix.concat(g.path(head)),
                g.path(*(a.loop.edges[1:] + (head,))),
            )
            result.expect(tail_equivalent(a, shifted), f"{g.name}: shift of {a.label()}")
    return result


def naimark_consistency(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    """Naimark holds iff one class; holds implies a single socle block; Gn peels off to G_{n-1}."""
    result = PropertyResult()
    bound = int(params.get("bound", DEFAULT_MAX_PATH_LEN))
    for g in _corpus(params) + list(_random_graphs(params, rng)):
        verdict = graded_naimark(g, bound)
        count = count_graded_simple_classes(g, bound)
        result.expect(verdict.holds == (count.count == 1), f"{g.name}: naimark={verdict.holds} count={count}")
        if verdict.holds:
            result.expect(bool(verdict.remark_cross_check), f"{g.name}: socle is not one block")
        if not necessary_conditions(g).all_pass:
            result.expect(not verdict.holds, f"{g.name}: naimark holds despite failed necessary condition")
    previous = socular_chain(gn(1), bound)
    for n in range(2, int(params.get("gn_max", 6)) + 1):
        chain = socular_chain(gn(n), bound)
        result.expect(
            chain.tau == n and graphs_isomorphic(chain.layers[1].graph, gn(n - 1)),
            f"Gn_{n}: first quotient is not Gn_{n - 1}",
        )
        result.expect(
            layer_descriptions(chain)[1:] == layer_descriptions(previous),
            f"Gn_{n}: layers after the first differ from the layers of Gn_{n - 1}",
        )
        result.expect(
            chain.verdict.count - previous.verdict.count == len(chain.layers[0].blocks),
            f"Gn_{n}: class count {chain.verdict.count} is not {previous.verdict.count} plus the first layer",
        )
        previous = chain
    return result


def corpus_round_trip(params: Mapping[str, Any], rng: random.Random) -> PropertyResult:
    result = PropertyResult()
    for g in _corpus(params) + list(_random_graphs(params, rng)):
        for fmt in ("text", "json"):
            result.expect(parse_graph(serialize(g, fmt)) == g, f"{g.name}: {fmt} round trip")
    return result


PROPERTIES: Dict[str, Callable[[Mapping[str, Any], random.Random], PropertyResult]] = {
    "closure_oracle": closure_oracle,
    "closure_laws": closure_laws,
    "downward_directed_oracle": downward_directed_oracle,
    "cycle_exits": cycle_exits,
    "quotient_laws": quotient_laws,
    "cuntz_krieger_relations": cuntz_krieger_relations,
    "associativity": associativity,
    "confluence": confluence,
    "anti_multiplicativity": anti_multiplicativity,
    "grading_additivity": grading_additivity,
    "matrix_grading_additivity": matrix_grading_additivity,
    "socle_block_count": socle_block_count,
    "witness_corpus": witness_corpus,
    "sink_modules": sink_modules,
    "tail_equivalence_laws": tail_equivalence_laws,
    "naimark_consistency": naimark_consistency,
    "corpus_round_trip": corpus_round_trip,
}
