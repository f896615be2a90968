"""Graded modules: sink modules, relation checks, simplicity oracle, lassos."""

from .sink import (
    DEFAULT_ORACLE_DIM_LIMIT,
    GeneratorAction,
    GeneratorKind,
    GradedModule,
    ModuleGenerator,
    ModuleReport,
    RelationReport,
    SinkModule,
    action_degree_violations,
    analyze_sink_module,
    build_sink_module,
    check_module_relations,
    direct_sum,
    edge_gen,
    ghost_gen,
    graded_simple_left_ideals,
    graded_simplicity_oracle,
    vertex_gen,
)
from .lasso import Lasso, tail_equivalent

__all__ = [
    "DEFAULT_ORACLE_DIM_LIMIT",
    "GeneratorAction",
    "GeneratorKind",
    "GradedModule",
    "ModuleGenerator",
    "ModuleReport",
    "RelationReport",
    "SinkModule",
    "action_degree_violations",
    "analyze_sink_module",
    "build_sink_module",
    "check_module_relations",
    "direct_sum",
    "edge_gen",
    "ghost_gen",
    "graded_simple_left_ideals",
    "graded_simplicity_oracle",
    "vertex_gen",
    "Lasso",
    "tail_equivalent",
]
