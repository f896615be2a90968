"""
Parsers and serializers for graph documents.

Text format (line based):

    graph <name>
    vertex <id> [<id> ...]
    edge <id> : <src> -> <dst>

`#` starts a comment. JSON format: {name, vertices: [..], edges: [{id, source, range}]}.
"""

import json
import re
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..domain.graph import Edge, Graph
from ..utils.errors import InputError, ParsingError
from .validators import validate_graph_document

_ID = r"[A-Za-z_][A-Za-z0-9_]*"
_HEADER = re.compile(rf"^graph\s+(?P<name>{_ID})$")
_VERTEX = re.compile(r"^vertex(?:\s+(?P<ids>.*))?$")
_EDGE = re.compile(
    rf"^edge\s+(?P<id>{_ID})\s*:\s*(?P<src>{_ID})\s*->\s*(?P<dst>{_ID})$"
)
_IDENT = re.compile(rf"^{_ID}$")

Span = Tuple[int, int]


@dataclass
class GraphDocument:
    """Parsed declarations with the (line, column) of each identifier."""

    name: str
    vertices: List[str] = field(default_factory=list)
    edges: List[Edge] = field(default_factory=list)
    spans: Dict[str, Span] = field(default_factory=dict)

    def to_graph(self) -> Graph:
        return Graph(self.name, tuple(self.vertices), tuple(self.edges))


class Parser:
    """Base parser interface."""

    def parse(self, data: str) -> Graph:
        """Parse input data into a graph."""
        raise NotImplementedError


class TextGraphParser(Parser):
    """Parser for the line-based text format."""

    def parse_document(self, data: str) -> GraphDocument:
        doc = None
        endpoints: List[Tuple[str, Span]] = []
        edge_spans: Dict[str, Span] = {}

        for lineno, raw in enumerate(data.splitlines(), start=1):
            content = raw.split("#", 1)[0]
            stripped = content.strip()
            if not stripped:
                continue
            indent = len(content) - len(content.lstrip())
            keyword = stripped.split(None, 1)[0]

            if doc is None:
                match = _HEADER.match(stripped)
                if not match:
                    raise ParsingError("expected 'graph <name>' header", lineno, indent + 1)
                doc = GraphDocument(match.group("name"))
                continue

            if keyword == "graph":
                raise ParsingError("duplicate graph header", lineno, indent + 1)

            if keyword == "vertex":
                match = _VERTEX.match(stripped)
                rest = (match.group("ids") if match else None) or ""
                if not rest.strip():
                    raise ParsingError("vertex declaration needs at least one identifier", lineno, indent + 1)
                offset = indent + match.start("ids")
                for token in re.finditer(r"\S+", rest):
                    column = offset + token.start() + 1
                    vertex = token.group()
                    if not _IDENT.match(vertex):
                        raise ParsingError(f"invalid identifier {vertex!r}", lineno, column)
                    if vertex in doc.vertices:
                        raise ParsingError(f"duplicate vertex {vertex}", lineno, column)
                    doc.vertices.append(vertex)
                    doc.spans[vertex] = (lineno, column)
                continue

            if keyword == "edge":
                match = _EDGE.match(stripped)
                if not match:
                    raise ParsingError("expected 'edge <id> : <src> -> <dst>'", lineno, indent + 1)
                edge_id = match.group("id")
                column = indent + match.start("id") + 1
                if any(e.id == edge_id for e in doc.edges):
                    raise ParsingError(f"duplicate edge {edge_id}", lineno, column)
                doc.edges.append(Edge(edge_id, match.group("src"), match.group("dst")))
                doc.spans.setdefault(edge_id, (lineno, column))
                edge_spans[edge_id] = (lineno, column)
                for group in ("src", "dst"):
                    endpoints.append((match.group(group), (lineno, indent + match.start(group) + 1)))
                continue

            raise ParsingError(f"unknown declaration {keyword!r}", lineno, indent + 1)

        if doc is None:
            raise ParsingError("empty document: expected 'graph <name>' header", 1, 1)

        declared = set(doc.vertices)
        for edge_id, (lineno, column) in edge_spans.items():
            if edge_id in declared:
                raise ParsingError(f"identifier {edge_id} names both a vertex and an edge", lineno, column)
        for vertex, (lineno, column) in endpoints:
            if vertex not in declared:
                raise ParsingError(f"undeclared vertex {vertex}", lineno, column)
        return doc

    def parse(self, data: str) -> Graph:
        return self.parse_document(data).to_graph()


class JSONGraphParser(Parser):
    """Parser for the JSON format."""

    def parse(self, data: str) -> Graph:
        try:
            parsed = json.loads(data)
        except json.JSONDecodeError as e:
            raise ParsingError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
        validate_graph_document(parsed)
        edges = tuple(Edge(e["id"], e["source"], e["range"]) for e in parsed["edges"])
        return Graph(parsed["name"], tuple(parsed["vertices"]), edges)


class MultiFormatParser(Parser):
    """Dispatch on the first significant character: `{` selects JSON."""

    def __init__(self):
        self.text = TextGraphParser()
        self.json = JSONGraphParser()

    def parse(self, data: str) -> Graph:
        if data.lstrip().startswith("{"):
            return self.json.parse(data)
        return self.text.parse(data)


def parse_graph_text(data: str) -> Graph:
    return TextGraphParser().parse(data)


def parse_graph_json(data: str) -> Graph:
    return JSONGraphParser().parse(data)


def parse_graph(data: str) -> Graph:
    return MultiFormatParser().parse(data)


def serialize(g: Graph, fmt: str = "text") -> str:
    """
    Render a graph in the text or JSON format.

    The text form is canonical: one `vertex` line, edges in declaration order,
    no comments. Parsing it gives back an equal graph, and serializing that
    graph reproduces the same text.
    """
    if fmt == "json":
        return json.dumps(g.to_dict(), indent=2) + "\n"
    if fmt != "text":
        raise InputError(f"unknown graph format {fmt!r}")
    lines = [f"graph {g.name}"]
    if g.vertices:
        lines.append("vertex " + " ".join(g.vertices))
    for e in g.edges:
        lines.append(f"edge {e.id} : {e.source} -> {e.range}")
    return "\n".join(lines) + "\n"


def load_graph_file(path: str) -> Graph:
    """Read a graph file; the format is chosen by extension, then by content."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    if path.endswith(".json"):
        return parse_graph_json(data)
    return parse_graph(data)
