"""Shared pytest fixtures for lpa-graded tests."""
import sys
from pathlib import Path

import pytest

SRC = Path(__file__).parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

G1_TEXT = """\
graph G1
vertex v11 v12 v13
edge e1 : v11 -> v12
edge e2 : v12 -> v13
edge c : v13 -> v13
"""

ROSE2_TEXT = """\
graph rose2
vertex v
edge g : v -> v
edge h : v -> v
"""

LINE2_TEXT = """\
graph line2
vertex v1 v2
edge e : v1 -> v2
"""

LOOP_TEXT = """\
graph loop
vertex v
edge c : v -> v
"""


@pytest.fixture
def g1():
    """G1 with short edge names e1, e2 and the loop c."""
    from lpa_graded.ingest.parsers import parse_graph_text
    return parse_graph_text(G1_TEXT)


@pytest.fixture
def rose2():
    """One vertex v with loops g and h."""
    from lpa_graded.ingest.parsers import parse_graph_text
    return parse_graph_text(ROSE2_TEXT)


@pytest.fixture
def line2():
    from lpa_graded.ingest.parsers import parse_graph_text
    return parse_graph_text(LINE2_TEXT)


@pytest.fixture
def loop():
    """One vertex v with the loop c."""
    from lpa_graded.ingest.parsers import parse_graph_text
    return parse_graph_text(LOOP_TEXT)


@pytest.fixture
def corpus():
    """Resolve `NAME[:PARAM]` corpus specs."""
    from lpa_graded.ingest.corpus import parse_corpus_spec
    return parse_corpus_spec


@pytest.fixture
def g1_file(tmp_path):
    path = tmp_path / "g1.txt"
    path.write_text(G1_TEXT, encoding="utf-8")
    return str(path)


@pytest.fixture
def line2_file(tmp_path):
    path = tmp_path / "line2.txt"
    path.write_text(LINE2_TEXT, encoding="utf-8")
    return str(path)
