"""
Tests for sink modules N_w, the relation checker and the graded-simplicity oracle.
"""

import random

import pytest

from lpa_graded.ingest.corpus import random_single_sink_graph
from lpa_graded.ingest.parsers import parse_graph_text
from lpa_graded.modules.sink import (
    GradedModule,
    action_degree_violations,
    analyze_sink_module,
    build_sink_module,
    check_module_relations,
    direct_sum,
    edge_gen,
    graded_simple_left_ideals,
    graded_simplicity_oracle,
)
from lpa_graded.utils.errors import GraphMismatchError, ModuleError, OracleGuardError


class TestSinkModule:
    """N_w has the paths ending at w as a homogeneous basis."""

    def test_basis(self, line2):
        m = build_sink_module(line2, "v2")
        assert m.name == "N_v2"
        assert m.labels == ["v2", "e"]
        assert m.degrees == [0, 1]
        assert m.to_dict() == {"name": "N_v2", "dim": 2, "basis": ["v2", "e"], "degrees": [0, 1], "sink": "v2"}

    def test_staircase_dimension(self, corpus):
        m = build_sink_module(corpus("staircase:2"), "b2")
        assert m.dim == 9
        assert m.degree_components() == {0: [0], 1: [1, 2], 2: [3, 4, 5], 3: [6, 7], 4: [8]}

    def test_not_a_sink(self, g1):
        with pytest.raises(ModuleError, match="v13 is not a sink"):
            build_sink_module(g1, "v13")

    def test_infinite_basis(self):
        g = parse_graph_text("graph g\nvertex a b\nedge l : a -> a\nedge e : a -> b\n")
        with pytest.raises(ModuleError, match="infinite basis"):
            build_sink_module(g, "b")


class TestRelations:
    """Relations (1)-(4) hold for N_w and fail once an action entry is removed."""

    def test_sink_modules_satisfy_relations(self, corpus):
        for spec, sink in (("line:4", "v4"), ("staircase:2", "b2"), ("twosinks", "v1")):
            m = build_sink_module(corpus(spec), sink)
            report = check_module_relations(m)
            assert report.passed, report.violations
            assert action_degree_violations(m) == []

    def test_random_single_sink_graphs(self):
        rng = random.Random(13)
        for _ in range(10):
            g = random_single_sink_graph(rng, max_vertices=6)
            m = build_sink_module(g, g.vertices[-1])
            assert check_module_relations(m).passed

    def test_removed_entry_breaks_relations(self, line2):
        m = build_sink_module(line2, "v2").with_entry_removed(edge_gen("e"), 0)
        report = check_module_relations(m)
        assert not report.passed
        assert report.first_violation == "relation (3): e^* e"
        assert "relation (4) at v1" in report.violations
        assert report.to_dict()["passed"] is False


class TestGradedSimplicity:
    def test_sink_module_is_graded_simple(self, line2, corpus):
        assert graded_simplicity_oracle(build_sink_module(line2, "v2"))
        assert graded_simplicity_oracle(build_sink_module(corpus("staircase:3"), "b3"))

    def test_direct_sum_is_not_simple(self, line2):
        m = build_sink_module(line2, "v2")
        doubled = direct_sum(m, m)
        assert doubled.dim == 4
        assert doubled.labels == ["1:v2", "1:e", "2:v2", "2:e"]
        assert check_module_relations(doubled).passed
        assert not graded_simplicity_oracle(doubled)

    def test_sum_of_different_sinks(self, corpus):
        g = corpus("twosinks")
        total = direct_sum(build_sink_module(g, "v1"), build_sink_module(g, "v2"))
        assert not graded_simplicity_oracle(total)

    def test_zero_module(self, line2):
        with pytest.raises(ModuleError, match="zero-dimensional"):
            graded_simplicity_oracle(GradedModule(line2, [], [], {}))

    def test_dimension_guard(self, corpus):
        m = build_sink_module(corpus("line:3"), "v3")
        with pytest.raises(OracleGuardError, match="exceeds the oracle guard of 2"):
            graded_simplicity_oracle(m, dim_limit=2)

    def test_direct_sum_needs_one_graph(self, line2, corpus):
        other = corpus("line:2")
        with pytest.raises(GraphMismatchError):
            direct_sum(build_sink_module(line2, "v2"), build_sink_module(other, "v2"))


class TestAnalysis:
    def test_report(self, line2):
        assert analyze_sink_module(line2, "v2").to_dict() == {
            "sink": "v2",
            "dim": 2,
            "degrees": [0, 1],
            "relations": "pass",
            "graded_simple": True,
        }

    def test_graded_simple_left_ideals(self, g1, line2, rose2):
        assert graded_simple_left_ideals(g1) == {"v11", "v12", "v13"}
        assert graded_simple_left_ideals(line2) == {"v1", "v2"}
        assert graded_simple_left_ideals(rose2) == set()
