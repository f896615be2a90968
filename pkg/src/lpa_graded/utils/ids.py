"""
Identifier rules and generated edge identifiers.
"""

import re

IDENTIFIER_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def is_valid_identifier(name: str) -> bool:
    """Check an identifier against the graph format's identifier grammar."""
    return isinstance(name, str) and IDENTIFIER_PATTERN.match(name) is not None


def generate_edge_id(source: str, target: str, index: int = 0) -> str:
    """Generate the deterministic corpus edge id `src_dst_k`."""
    return f"{source}_{target}_{index}"
