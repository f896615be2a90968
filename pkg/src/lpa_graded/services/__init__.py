"""Decision procedures, report rendering and the self-check runner."""

from .classifier import (
    ChainLayer,
    ChainVerdict,
    NaimarkVerdict,
    NaimarkWitness,
    NecessaryConditions,
    SocularChainReport,
    WitnessKind,
    count_graded_simple_classes,
    graded_naimark,
    is_graded_simple_ring,
    necessary_conditions,
    socular_chain,
)
from .reports import (
    render_blocks,
    render_chain,
    render_classification,
    render_json,
    render_module,
    render_naimark,
    render_text,
)
from .selfcheck import load_suite, run_selfcheck

__all__ = [
    "ChainLayer",
    "ChainVerdict",
    "NaimarkVerdict",
    "NaimarkWitness",
    "NecessaryConditions",
    "SocularChainReport",
    "WitnessKind",
    "count_graded_simple_classes",
    "graded_naimark",
    "is_graded_simple_ring",
    "necessary_conditions",
    "socular_chain",
    "render_blocks",
    "render_chain",
    "render_classification",
    "render_json",
    "render_module",
    "render_naimark",
    "render_text",
    "load_suite",
    "run_selfcheck",
]
