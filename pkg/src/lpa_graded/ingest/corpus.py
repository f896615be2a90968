"""
Built-in corpus of example graphs.

Edge identifiers are generated as `src_dst_k`, k counting parallel edges.
"""

import random
from typing import Callable, Dict, List, Optional, Tuple

from ..domain.graph import Edge, Graph
from ..utils.errors import CorpusError
from ..utils.ids import generate_edge_id


class _GraphBuilder:
    def __init__(self, name: str):
        self.name = name
        self.vertices: List[str] = []
        self.edges: List[Edge] = []
        self._parallel: Dict[Tuple[str, str], int] = {}

    def vertex(self, *names: str) -> "_GraphBuilder":
        self.vertices.extend(names)
        return self

    def edge(self, source: str, target: str) -> "_GraphBuilder":
        k = self._parallel.get((source, target), 0)
        self._parallel[(source, target)] = k + 1
        self.edges.append(Edge(generate_edge_id(source, target, k), source, target))
        return self

    def chain(self, *names: str) -> "_GraphBuilder":
        for source, target in zip(names, names[1:]):
            self.edge(source, target)
        return self

    def build(self) -> Graph:
        return Graph(self.name, tuple(self.vertices), tuple(self.edges))


def loop() -> Graph:
    """One vertex v with one loop."""
    return _GraphBuilder("loop").vertex("v").edge("v", "v").build()


def line(k: int = 2) -> Graph:
    """v1 -> v2 -> ... -> vk."""
    names = [f"v{i}" for i in range(1, k + 1)]
    return _GraphBuilder(f"line_{k}").vertex(*names).chain(*names).build()


def rose(k: int = 2) -> Graph:
    """One vertex with k loops."""
    builder = _GraphBuilder(f"rose_{k}").vertex("v")
    for _ in range(k):
        builder.edge("v", "v")
    return builder.build()


def twosinks() -> Graph:
    return _GraphBuilder("twosinks").vertex("v1", "v2").build()


def figure8() -> Graph:
    """A loop at v1 and the 2-cycle v1 -> v2 -> v1, sharing v1."""
    return (
        _GraphBuilder("figure8")
        .vertex("v1", "v2")
        .edge("v1", "v1")
        .edge("v1", "v2")
        .edge("v2", "v1")
        .build()
    )


def _row(i: int) -> Tuple[str, str, str]:
    return (f"v{i}1", f"v{i}2", f"v{i}3")


def _add_first_row(builder: _GraphBuilder) -> None:
    a, b, c = _row(1)
    builder.vertex(a, b, c).chain(a, b, c).edge(c, c)


def _add_row(builder: _GraphBuilder, i: int, down: str, last_down: Optional[str] = None) -> None:
    """Row i: a -> b -> c with loop at c; a, b and c all point at `down`."""
    a, b, c = _row(i)
    builder.vertex(a, b, c)
    builder.edge(a, down).edge(a, b)
    builder.edge(b, down).edge(b, c)
    builder.edge(c, last_down or down).edge(c, c)


def gn(n: int = 1) -> Graph:
    """G_n: row 1 is v11 -> v12 -> v13 with a loop at v13; row i feeds v_{i-1,1}."""
    builder = _GraphBuilder("G1" if n == 1 else f"Gn_{n}")
    _add_first_row(builder)
    for i in range(2, n + 1):
        _add_row(builder, i, f"v{i - 1}1")
    return builder.build()


def g1() -> Graph:
    return gn(1)


def g2() -> Graph:
    builder = _GraphBuilder("G2")
    _add_first_row(builder)
    _add_row(builder, 2, "v11")
    return builder.build()


def g3() -> Graph:
    """As drawn: the third row's loop vertex v33 points at v11, not v21."""
    builder = _GraphBuilder("G3")
    _add_first_row(builder)
    _add_row(builder, 2, "v11")
    _add_row(builder, 3, "v21", last_down="v11")
    return builder.build()


def staircase(k: int = 2) -> Graph:
    """
    Finite truncation of the staircase graph with k feeder columns.

    Bottom line v -> b1 -> ... -> bk ends in the sink bk. Column j is the
    diagonal aj -> mj -> wj -> bj.
    """
    builder = _GraphBuilder(f"staircase_{k}")
    bottom = ["v"] + [f"b{j}" for j in range(1, k + 1)]
    builder.vertex(*bottom)
    for j in range(1, k + 1):
        builder.vertex(f"a{j}", f"m{j}", f"w{j}")
    builder.chain(*bottom)
    for j in range(1, k + 1):
        builder.chain(f"a{j}", f"m{j}", f"w{j}", f"b{j}")
    return builder.build()


def tworow_comet(k: int = 2) -> Graph:
    """
    Finite truncation of the two-row comet with k feeder columns.

    The 4-cycle v -> c1 -> c2 -> c3 -> v has no exits; the top row
    pk -> ... -> p1 feeds v and the bottom row qk -> ... -> q1 feeds c3.
    """
    builder = _GraphBuilder(f"tworow_comet_{k}")
    builder.vertex("v", "c1", "c2", "c3")
    top = [f"p{j}" for j in range(k, 0, -1)]
    bottom = [f"q{j}" for j in range(k, 0, -1)]
    builder.vertex(*top).vertex(*bottom)
    builder.chain("v", "c1", "c2", "c3", "v")
    builder.chain(*top, "v")
    builder.chain(*bottom, "c3")
    return builder.build()


# name -> (factory, default parameter, (min, max)) ; parameterless entries use None
_CORPUS: Dict[str, Tuple[Callable[..., Graph], Optional[int], Optional[Tuple[int, int]]]] = {
    "loop": (loop, None, None),
    "line": (line, 2, (1, 200)),
    "rose": (rose, 2, (1, 20)),
    "G1": (g1, None, None),
    "G2": (g2, None, None),
    "G3": (g3, None, None),
    "Gn": (gn, 1, (1, 30)),
    "staircase": (staircase, 2, (1, 50)),
    "tworow_comet": (tworow_comet, 2, (1, 50)),
    "twosinks": (twosinks, None, None),
    "figure8": (figure8, None, None),
}


def corpus_names() -> List[str]:
    return list(_CORPUS)


def builtin_corpus(name: str, param: Optional[int] = None) -> Graph:
    """Build a named corpus graph."""
    if name not in _CORPUS:
        raise CorpusError(f"unknown corpus graph {name!r}; known: {', '.join(_CORPUS)}")
    factory, default, bounds = _CORPUS[name]
    if bounds is None:
        if param is not None:
            raise CorpusError(f"corpus graph {name} takes no parameter")
        return factory()
    value = default if param is None else param
    low, high = bounds
    if not isinstance(value, int) or isinstance(value, bool) or not low <= value <= high:
        raise CorpusError(f"parameter for {name} must be an integer in [{low}, {high}], got {value!r}")
    return factory(value)


def parse_corpus_spec(spec: str) -> Graph:
    """Resolve `NAME[:PARAM]`, e.g. `Gn:5` or `line:3`."""
    name, sep, raw = spec.partition(":")
    if not sep:
        return builtin_corpus(name)
    try:
        param = int(raw)
    except ValueError:
        raise CorpusError(f"corpus parameter must be an integer, got {raw!r}") from None
    return builtin_corpus(name, param)


def random_graph(
    rng: random.Random,
    max_vertices: int = 6,
    max_edges: Optional[int] = None,
    acyclic: bool = False,
    name: str = "random",
) -> Graph:
    """Random multigraph on v1..vn; acyclic graphs only point from lower to higher index."""
    n = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(1, n + 1)]
    builder = _GraphBuilder(name).vertex(*names)
    for _ in range(rng.randint(0, 2 * n if max_edges is None else max_edges)):
        i, j = rng.randrange(n), rng.randrange(n)
        if acyclic:
            if i == j:
                continue
            i, j = min(i, j), max(i, j)
        builder.edge(names[i], names[j])
    return builder.build()


def random_single_sink_graph(rng: random.Random, max_vertices: int = 8, name: str = "random_dag") -> Graph:
    """Random acyclic graph whose last vertex is its only sink."""
    n = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(1, n + 1)]
    builder = _GraphBuilder(name).vertex(*names)
    for i in range(n - 1):
        builder.edge(names[i], names[rng.randint(i + 1, n - 1)])
        if rng.random() < 0.4:
            builder.edge(names[i], names[rng.randint(i + 1, n - 1)])
    return builder.build()
