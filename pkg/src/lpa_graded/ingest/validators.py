"""
Validators for JSON graph documents.
"""

from typing import Any, Dict, List

from ..utils.errors import SchemaError
from ..utils.ids import is_valid_identifier


class Validator:
    """Base validator interface."""

    def validate(self, data: Any) -> List[SchemaError]:
        """Validate data and return list of errors."""
        raise NotImplementedError


class GraphDocumentValidator(Validator):
    """Validator for the JSON graph format {name, vertices, edges}."""

    REQUIRED_EDGE_FIELDS = ("id", "source", "range")

    def validate(self, data: Any) -> List[SchemaError]:
        """
        Validate a decoded JSON graph document.

        Errors carry JSON-pointer paths, e.g. `/edges/0/range`.
        """
        if not isinstance(data, dict):
            return [SchemaError("document must be an object", "")]

        errors = []
        for key in data:
            if key not in ("name", "vertices", "edges"):
                errors.append(SchemaError(f"unexpected member {key!r}", f"/{key}"))

        name = data.get("name")
        if name is None:
            errors.append(SchemaError("name is required", "/name"))
        elif not isinstance(name, str) or not is_valid_identifier(name):
            errors.append(SchemaError("name must be an identifier string", "/name"))

        vertices = data.get("vertices")
        declared = set()
        if vertices is None:
            errors.append(SchemaError("vertices is required", "/vertices"))
        elif not isinstance(vertices, list):
            errors.append(SchemaError("vertices must be an array", "/vertices"))
        else:
            for i, vertex in enumerate(vertices):
                pointer = f"/vertices/{i}"
                if not isinstance(vertex, str) or not is_valid_identifier(vertex):
                    errors.append(SchemaError("vertex must be an identifier string", pointer))
                elif vertex in declared:
                    errors.append(SchemaError(f"duplicate vertex {vertex}", pointer))
                else:
                    declared.add(vertex)

        edges = data.get("edges")
        if edges is None:
            errors.append(SchemaError("edges is required", "/edges"))
        elif not isinstance(edges, list):
            errors.append(SchemaError("edges must be an array", "/edges"))
        else:
            seen_ids = set()
            for i, edge in enumerate(edges):
                errors.extend(self._validate_edge(edge, f"/edges/{i}", declared, seen_ids))

        return errors

    def _validate_edge(
        self, edge: Any, pointer: str, declared: set, seen_ids: set
    ) -> List[SchemaError]:
        if not isinstance(edge, dict):
            return [SchemaError("edge must be an object", pointer)]
        errors = []
        for key in edge:
            if key not in self.REQUIRED_EDGE_FIELDS:
                errors.append(SchemaError(f"unexpected member {key!r}", f"{pointer}/{key}"))
        for key in self.REQUIRED_EDGE_FIELDS:
            value = edge.get(key)
            if value is None:
                errors.append(SchemaError(f"{key} is required", f"{pointer}/{key}"))
            elif not isinstance(value, str) or not is_valid_identifier(value):
                errors.append(SchemaError(f"{key} must be an identifier string", f"{pointer}/{key}"))
            elif key == "id":
                if value in seen_ids:
                    errors.append(SchemaError(f"duplicate edge {value}", f"{pointer}/id"))
                seen_ids.add(value)
            elif value not in declared:
                errors.append(SchemaError(f"vertex {value} is not declared", f"{pointer}/{key}"))
        return errors


def validate_graph_document(data: Dict[str, Any]) -> None:
    """Raise the first schema error, if any."""
    errors = GraphDocumentValidator().validate(data)
    if errors:
        raise errors[0]
