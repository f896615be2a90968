"""Graph document parsing, validation and the built-in corpus."""

from .parsers import (
    GraphDocument,
    Parser,
    TextGraphParser,
    JSONGraphParser,
    MultiFormatParser,
    load_graph_file,
    parse_graph,
    parse_graph_json,
    parse_graph_text,
    serialize,
)
from .validators import Validator, GraphDocumentValidator, validate_graph_document
from .corpus import (
    builtin_corpus,
    corpus_names,
    parse_corpus_spec,
    random_graph,
    random_single_sink_graph,
)

__all__ = [
    "GraphDocument",
    "Parser",
    "TextGraphParser",
    "JSONGraphParser",
    "MultiFormatParser",
    "load_graph_file",
    "parse_graph",
    "parse_graph_json",
    "parse_graph_text",
    "serialize",
    "Validator",
    "GraphDocumentValidator",
    "validate_graph_document",
    "builtin_corpus",
    "corpus_names",
    "parse_corpus_spec",
    "random_graph",
    "random_single_sink_graph",
]
