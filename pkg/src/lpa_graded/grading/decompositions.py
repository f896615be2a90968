"""
Graded matrix decompositions: acyclic (sink anchored), comet (anchored at a
cycle without exits) and the graded socle.
"""

import logging
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx

from ..domain.graph import Cycle, Graph, Path
from ..domain.structure import (
    CycleRecord,
    classify_vertices,
    line_point_sink,
    no_exit_cycles,
)
from ..utils.errors import HypothesisError
from .matrices import AnchorKind, BaseKind, MatrixBlock

logger = logging.getLogger(__name__)

DEFAULT_MAX_PATH_LEN = 20
SAMPLE_LIMIT = 256


def _feeder_skeleton(g: Graph, blocked: Optional[str]) -> nx.DiGraph:
    """Edges usable by paths ending at the anchor: none may leave `blocked`."""
    skeleton = nx.DiGraph()
    skeleton.add_nodes_from(g.vertices)
    skeleton.add_edges_from((e.source, e.range) for e in g.edges if e.source != blocked)
    return skeleton


def has_infinitely_many_paths(g: Graph, anchor: str, blocked: Optional[str] = None) -> bool:
    """True when a cycle (avoiding `blocked` as a source) reaches the anchor."""
    skeleton = _feeder_skeleton(g, blocked)
    feeders = nx.ancestors(skeleton, anchor) | {anchor}
    return not nx.is_directed_acyclic_graph(skeleton.subgraph(feeders))


def paths_ending_at(
    g: Graph, anchor: str, blocked: Optional[str] = None, max_len: Optional[int] = None
) -> List[Path]:
    """
    Paths ending at anchor, breadth first by length, ties lexicographic.

    No edge of a returned path leaves `blocked`. Without `max_len` the set
    must be finite.
    """
    level = [g.vertex_path(anchor)]
    found: List[Path] = []
    length = 0
    while level:
        found.extend(sorted(level, key=lambda p: p.edges))
        if max_len is not None and length >= max_len:
            break
        extended = []
        for p in level:
            for e in g.in_edges(p.start):
                if e.source != blocked:
                    extended.append(Path(e.source, (e.id,) + p.edges, p.end))
        level = extended
        length += 1
    return found


def path_length_sample(
    g: Graph, anchor: str, bound: int, blocked: Optional[str] = None, limit: int = SAMPLE_LIMIT
) -> Tuple[int, ...]:
    """Lengths of the paths ending at anchor up to bound, by counting rather than listing."""
    counts: Dict[str, int] = {anchor: 1}
    sample: List[int] = []
    for length in range(bound + 1):
        total = sum(counts.values())
        sample.extend([length] * min(total, limit - len(sample)))
        if len(sample) >= limit or not counts:
            break
        following: Dict[str, int] = {}
        for vertex, count in counts.items():
            for e in g.in_edges(vertex):
                if e.source != blocked:
                    following[e.source] = following.get(e.source, 0) + count
        counts = following
    return tuple(sample)


def acyclic_decomposition(g: Graph, w: str, bound: int = DEFAULT_MAX_PATH_LEN) -> MatrixBlock:
    """
    Block M_Λ(K)(δ̄) indexed by the paths ending at the sink w.

    A line point that is not a sink is anchored at the sink ending its tree.
    """
    g.require_vertex(w)
    if not g.is_sink(w):
        if not classify_vertices(g)[w].is_line_point:
            raise HypothesisError(f"{w} is neither a sink nor a line point")
        w = line_point_sink(g, w)

    if has_infinitely_many_paths(g, w):
        sample = path_length_sample(g, w, bound)
        logger.debug(f"[SOCLE] sink={w} infinite sample={len(sample)} bound={bound}")
        return MatrixBlock(
            BaseKind.FIELD, 1, sample, AnchorKind.SINK, w, infinite=True, bound=bound
        )
    paths = paths_ending_at(g, w)
    return MatrixBlock(
        BaseKind.FIELD, 1, tuple(p.length for p in paths), AnchorKind.SINK, w, paths=tuple(paths)
    )


def comet_decomposition(
    g: Graph, cycle: Union[Cycle, CycleRecord], bound: int = DEFAULT_MAX_PATH_LEN
) -> MatrixBlock:
    """
    Block M_Υ(K[x^m, x^-m])(σ̄) for a cycle without exits, m its length.

    The index set is the paths ending at the base u that do not pass
    through u before their end.
    """
    if isinstance(cycle, CycleRecord):
        cycle = cycle.cycle
    on_cycle = set(cycle.vertices(g))
    exits = [e.id for e in g.edges if e.source in on_cycle and e.id not in cycle.edges]
    if exits:
        raise HypothesisError(f"cycle {' '.join(cycle.edges)} has exits: {', '.join(exits)}")
    u = cycle.base(g)
    based = cycle.rotated_to(g, u)

    if has_infinitely_many_paths(g, u, blocked=u):
        sample = path_length_sample(g, u, bound, blocked=u)
        logger.debug(f"[SOCLE] cycle base={u} infinite sample={len(sample)} bound={bound}")
        return MatrixBlock(
            BaseKind.LAURENT, cycle.length, sample, AnchorKind.CYCLE, u,
            anchor_cycle=based.edges, infinite=True, bound=bound,
        )
    paths = paths_ending_at(g, u, blocked=u)
    return MatrixBlock(
        BaseKind.LAURENT, cycle.length, tuple(p.length for p in paths), AnchorKind.CYCLE, u,
        anchor_cycle=based.edges, paths=tuple(paths),
    )


def graded_socle(g: Graph, bound: int = DEFAULT_MAX_PATH_LEN) -> List[MatrixBlock]:
    """One field block per sink, then one Laurent block per cycle without exits."""
    blocks = [acyclic_decomposition(g, w, bound) for w in g.sinks()]
    blocks.extend(comet_decomposition(g, record, bound) for record in no_exit_cycles(g))
    logger.debug(f"[SOCLE] graph={g.name} blocks={len(blocks)}")
    return blocks
