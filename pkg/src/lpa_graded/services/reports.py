"""
Text and JSON rendering of analysis results.
"""

import json
from typing import Any, Dict, List, Optional

from ..domain.graph import Graph, VertexProfile
from ..grading.matrices import MatrixBlock
from ..modules.sink import ModuleReport
from .classifier import NaimarkVerdict, NecessaryConditions, SocularChainReport


def _flag(value: bool) -> str:
    return "pass" if value else "fail"


def render_naimark(verdict: NaimarkVerdict, conditions: Optional[NecessaryConditions] = None) -> str:
    if verdict.holds:
        lines = [
            f"HOLDS; witness {verdict.witness.vertex} ({verdict.witness.kind.value}); "
            f"form {verdict.matrix_form.describe()}"
        ]
    else:
        lines = [f"FAILS; {verdict.failed_condition}: {verdict.counterexample}"]
    if conditions is not None:
        lines.append(
            f"conditions: downward_directed={_flag(conditions.downward_directed.holds)} "
            f"only_trivial_hsat={_flag(conditions.only_trivial_hsat)} "
            f"cycles_disjoint={_flag(conditions.cycles_disjoint)} row_finite=automatic"
        )
    return "\n".join(lines)


def render_blocks(blocks: List[MatrixBlock]) -> str:
    if not blocks:
        return "socle: 0"
    return "\n".join(f"{b.describe()} @ {b.anchor_vertex}" for b in blocks)


def render_chain(report: SocularChainReport) -> str:
    lines = []
    for number, layer in enumerate(report.layers, start=1):
        forms = ", ".join(b.describe() for b in layer.blocks)
        lines.append(f"layer {number}: {layer.added_vertices!r}; blocks {forms}")
    lines.append(f"layers: {report.tau}")
    lines.append(report.verdict.describe())
    return "\n".join(lines)


def render_classification(g: Graph, profiles: Dict[str, VertexProfile]) -> str:
    width = max([len(v) for v in g.vertices] + [6])
    header = f"{'vertex':<{width}}  kind     bifurcation  line_point  laurent  no_exit_cycle"
    rows = [header]
    for v in g.vertices:
        p = profiles[v]
        rows.append(
            f"{v:<{width}}  {p.kind.value:<7}  {_yes(p.is_bifurcation):<11}  "
            f"{_yes(p.is_line_point):<10}  {_yes(p.is_laurent):<7}  {_yes(p.on_no_exit_cycle)}"
        )
    return "\n".join(rows)


def _yes(value: bool) -> str:
    return "yes" if value else "no"


def render_module(report: ModuleReport) -> str:
    data = report.to_dict()
    degrees = ",".join(str(d) for d in data["degrees"])
    return (
        f"module N_{data['sink']}: dim {data['dim']}; degrees ({degrees}); "
        f"relations {data['relations']}; graded simple {_yes(data['graded_simple'])}"
    )


def render_json(data: Any) -> str:
    if hasattr(data, "to_dict"):
        data = data.to_dict()
    elif isinstance(data, list):
        data = [item.to_dict() if hasattr(item, "to_dict") else item for item in data]
    return json.dumps(data, indent=2)


def render_text(data: Any) -> str:
    """Dispatch on result type."""
    if isinstance(data, NaimarkVerdict):
        return render_naimark(data)
    if isinstance(data, SocularChainReport):
        return render_chain(data)
    if isinstance(data, ModuleReport):
        return render_module(data)
    if isinstance(data, MatrixBlock):
        return data.describe()
    if isinstance(data, list) and all(isinstance(item, MatrixBlock) for item in data):
        return render_blocks(data)
    raise TypeError(f"no text rendering for {type(data).__name__}")
