"""
Tests for the text and JSON graph formats.
"""

import json

import pytest

from lpa_graded.ingest.parsers import (
    JSONGraphParser,
    MultiFormatParser,
    TextGraphParser,
    load_graph_file,
    parse_graph,
    parse_graph_json,
    parse_graph_text,
    serialize,
)
from lpa_graded.ingest.validators import GraphDocumentValidator
from lpa_graded.utils.errors import GraphValidationError, InputError, ParsingError, SchemaError

from conftest import G1_TEXT, LINE2_TEXT


class TestTextFormat:
    """Line-based `graph` / `vertex` / `edge` declarations."""

    def test_parse_g1(self, g1):
        assert g1.name == "G1"
        assert g1.vertices == ("v11", "v12", "v13")
        assert [(e.id, e.source, e.range) for e in g1.edges] == [
            ("e1", "v11", "v12"),
            ("e2", "v12", "v13"),
            ("c", "v13", "v13"),
        ]

    def test_comments_and_blank_lines(self):
        g = parse_graph_text("# header comment\n\ngraph g  # name\nvertex a b\n\nedge e : a -> b # edge\n")
        assert g.vertices == ("a", "b")
        assert g.edges[0].id == "e"

    def test_vertices_over_several_lines(self):
        g = parse_graph_text("graph g\nvertex a\nvertex b c\n")
        assert g.vertices == ("a", "b", "c")

    def test_spans(self):
        doc = TextGraphParser().parse_document(G1_TEXT)
        assert doc.spans["v12"] == (2, 12)
        assert doc.spans["e2"] == (4, 6)

    def test_missing_header(self):
        with pytest.raises(ParsingError, match="expected 'graph <name>' header") as exc:
            parse_graph_text("vertex a\n")
        assert (exc.value.line, exc.value.column) == (1, 1)

    def test_empty_document(self):
        with pytest.raises(ParsingError, match="empty document") as exc:
            parse_graph_text("# nothing here\n")
        assert str(exc.value).startswith("line 1, column 1:")

    def test_duplicate_header(self):
        with pytest.raises(ParsingError, match="duplicate graph header") as exc:
            parse_graph_text("graph a\ngraph b\n")
        assert exc.value.line == 2

    def test_duplicate_vertex_position(self):
        with pytest.raises(ParsingError, match="duplicate vertex v1") as exc:
            parse_graph_text("graph g\nvertex v1 v1\n")
        assert (exc.value.line, exc.value.column) == (2, 11)

    def test_duplicate_edge(self):
        with pytest.raises(ParsingError, match="duplicate edge e"):
            parse_graph_text("graph g\nvertex a\nedge e : a -> a\nedge e : a -> a\n")

    def test_undeclared_vertex_position(self):
        with pytest.raises(ParsingError, match="undeclared vertex b") as exc:
            parse_graph_text("graph g\nvertex a\nedge e : a -> b\n")
        assert str(exc.value) == "line 3, column 15: undeclared vertex b"

    def test_edges_may_precede_vertex_declarations(self):
        g = parse_graph_text("graph g\nedge e : a -> b\nvertex a b\n")
        assert g.edges[0].range == "b"

    def test_unknown_declaration(self):
        with pytest.raises(ParsingError, match="unknown declaration 'node'"):
            parse_graph_text("graph g\nnode a\n")

    def test_malformed_edge(self):
        with pytest.raises(ParsingError, match="expected 'edge"):
            parse_graph_text("graph g\nvertex a\nedge e a -> a\n")

    def test_shared_identifier_position(self):
        with pytest.raises(ParsingError, match="identifier a names both a vertex and an edge") as exc:
            parse_graph_text("graph g\nvertex a b\nedge a : a -> b\n")
        assert (exc.value.line, exc.value.column) == (3, 6)

    def test_shared_identifier_declared_after_the_edge(self):
        with pytest.raises(ParsingError, match="names both a vertex and an edge") as exc:
            parse_graph_text("graph g\nedge x : a -> b\nvertex a b x\n")
        assert str(exc.value).startswith("line 2, column 6:")


class TestJSONFormat:
    """JSON documents {name, vertices, edges} with pointer-addressed errors."""

    def test_parse(self, line2):
        data = json.dumps(line2.to_dict())
        assert parse_graph_json(data) == line2

    def test_undeclared_range(self):
        doc = {"name": "g", "vertices": ["v1"], "edges": [{"id": "e", "source": "v1", "range": "v9"}]}
        with pytest.raises(SchemaError) as exc:
            parse_graph_json(json.dumps(doc))
        assert exc.value.pointer == "/edges/0/range"
        assert str(exc.value) == "/edges/0/range: vertex v9 is not declared"

    def test_validator_collects_every_error(self):
        errors = GraphDocumentValidator().validate({"vertices": ["a", "a"], "extra": 1})
        pointers = {e.pointer for e in errors}
        assert {"/extra", "/name", "/vertices/1", "/edges"} <= pointers

    def test_non_object_document(self):
        with pytest.raises(SchemaError, match="document must be an object"):
            JSONGraphParser().parse("[1, 2]")

    def test_invalid_json(self):
        with pytest.raises(ParsingError, match="invalid JSON"):
            parse_graph_json('{"name": ')

    def test_shared_identifier_is_rejected_by_the_model(self):
        doc = {"name": "g", "vertices": ["a"], "edges": [{"id": "a", "source": "a", "range": "a"}]}
        with pytest.raises(GraphValidationError, match="names both a vertex and an edge") as exc:
            parse_graph_json(json.dumps(doc))
        assert exc.value.field == "edges"


class TestDispatchAndFiles:
    def test_multi_format_dispatch(self, line2):
        parser = MultiFormatParser()
        assert parser.parse(LINE2_TEXT) == line2
        assert parser.parse("  " + json.dumps(line2.to_dict())) == line2

    def test_serialize_text(self, line2):
        assert serialize(line2) == "graph line2\nvertex v1 v2\nedge e : v1 -> v2\n"

    def test_serialize_round_trip(self, corpus):
        for spec in ("G2", "rose:3", "figure8", "staircase:2"):
            g = corpus(spec)
            assert parse_graph(serialize(g, "text")) == g
            assert parse_graph(serialize(g, "json")) == g

    def test_serialize_is_canonical(self):
        text = "# two vertex lines\ngraph g\nvertex a\nvertex b  # second\nedge e : a -> b\n"
        canonical = serialize(parse_graph_text(text))
        assert canonical == "graph g\nvertex a b\nedge e : a -> b\n"
        assert serialize(parse_graph_text(canonical)) == canonical

    def test_serialize_unknown_format(self, line2):
        with pytest.raises(InputError, match="unknown graph format"):
            serialize(line2, "yaml")

    def test_load_by_extension(self, tmp_path, line2):
        path = tmp_path / "g.json"
        path.write_text(serialize(line2, "json"), encoding="utf-8")
        assert load_graph_file(str(path)) == line2

    def test_load_text_file(self, g1_file, g1):
        assert load_graph_file(g1_file) == g1

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match="cannot read"):
            load_graph_file(str(tmp_path / "absent.txt"))
