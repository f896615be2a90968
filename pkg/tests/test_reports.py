"""
Tests for text and JSON rendering.
"""

import json

import pytest

from lpa_graded.grading.decompositions import graded_socle
from lpa_graded.modules.sink import analyze_sink_module
from lpa_graded.domain.structure import classify_vertices
from lpa_graded.services.classifier import graded_naimark, necessary_conditions, socular_chain
from lpa_graded.services.reports import (
    render_blocks,
    render_chain,
    render_classification,
    render_json,
    render_module,
    render_naimark,
    render_text,
)


class TestTextReports:
    def test_naimark_holds(self, corpus):
        g = corpus("G1")
        text = render_naimark(graded_naimark(g), necessary_conditions(g))
        assert text.splitlines() == [
            "HOLDS; witness v13 (cycle without exits); form M_3(K[x,x^-1])(0,1,2)",
            "conditions: downward_directed=pass only_trivial_hsat=pass cycles_disjoint=pass row_finite=automatic",
        ]

    def test_naimark_fails(self, corpus):
        text = render_naimark(graded_naimark(corpus("twosinks")))
        assert text == "FAILS; downward_directed: v1 and v2 have no common descendant"

    def test_blocks(self, g1, rose2):
        assert render_blocks(graded_socle(g1)) == "M_3(K[x,x^-1])(0,1,2) @ v13"
        assert render_blocks(graded_socle(rose2)) == "socle: 0"

    def test_chain(self, corpus):
        lines = render_chain(socular_chain(corpus("G2"))).splitlines()
        assert lines[0].startswith("layer 1: {v11, v12, v13}; blocks M_inf(K[x,x^-1])(0,1,2,3,3,3,")
        assert lines[-2:] == ["layers: 2", "classes: 2"]

    def test_classification(self, line2):
        lines = render_classification(line2, classify_vertices(line2)).splitlines()
        assert lines[0].startswith("vertex")
        assert lines[1].split() == ["v1", "regular", "no", "yes", "no", "no"]
        assert lines[2].split() == ["v2", "sink", "no", "yes", "no", "no"]

    def test_module(self, line2):
        text = render_module(analyze_sink_module(line2, "v2"))
        assert text == "module N_v2: dim 2; degrees (0,1); relations pass; graded simple yes"

    def test_dispatch(self, corpus, g1):
        assert render_text(graded_naimark(corpus("loop"))).startswith("HOLDS; witness v")
        assert render_text(graded_socle(g1)[0]) == "M_3(K[x,x^-1])(0,1,2)"
        with pytest.raises(TypeError, match="no text rendering for int"):
            render_text(3)


class TestJSONReports:
    def test_verdict(self, corpus):
        data = json.loads(render_json(graded_naimark(corpus("G1"))))
        assert data["holds"] is True
        assert data["form"]["index"] == {"kind": "finite", "gradings": [0, 1, 2]}

    def test_block_list(self, g1):
        data = json.loads(render_json(graded_socle(g1)))
        assert data[0]["anchor"] == {"kind": "cycle", "vertex": "v13", "cycle": ["c"]}

    def test_plain_data(self):
        assert json.loads(render_json({"a": [1, 2]})) == {"a": [1, 2]}
