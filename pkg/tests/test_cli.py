"""
Tests for the command-line interface: output, batch mode and exit statuses.
"""

import io
import json
import sys

import pytest

from lpa_graded import cli
from lpa_graded.utils.errors import InvariantViolation

from conftest import G1_TEXT, ROSE2_TEXT


def run_cli(monkeypatch, capsys, *args):
    """Run main() with argv; return (exit code, stdout, stderr)."""
    monkeypatch.setattr(sys, "argv", ["lpa-graded", *args])
    with pytest.raises(SystemExit) as exc:
        cli.main()
    out, err = capsys.readouterr()
    return exc.value.code, out, err


@pytest.fixture(autouse=True)
def quiet(monkeypatch):
    monkeypatch.setenv("LPA_GRADED_QUIET", "1")


class TestAnalyses:
    """One analysis per subcommand."""

    def test_naimark_g1(self, monkeypatch, capsys):
        code, out, _ = run_cli(monkeypatch, capsys, "naimark", "--corpus", "G1")
        assert code == 0
        assert out.splitlines()[0] == "HOLDS; witness v13 (cycle without exits); form M_3(K[x,x^-1])(0,1,2)"

    def test_naimark_json(self, monkeypatch, capsys):
        code, out, _ = run_cli(monkeypatch, capsys, "naimark", "--corpus", "loop", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["naimark"]["holds"] is True
        assert data["naimark"]["form"]["base"] == {"kind": "laurent", "period": 1}
        assert data["conditions"]["all_pass"] is True

    def test_naimark_failure_is_not_an_error(self, monkeypatch, capsys):
        code, out, _ = run_cli(monkeypatch, capsys, "naimark", "--corpus", "G2")
        assert code == 0
        assert out.startswith("FAILS; single_vertex_closure:")

    def test_chain_g3(self, monkeypatch, capsys):
        code, out, _ = run_cli(monkeypatch, capsys, "chain", "--corpus", "G3")
        assert code == 0
        assert out.splitlines()[-2:] == ["layers: 2", "classes: 3"]

    def test_chain_gn(self, monkeypatch, capsys):
        _, out, _ = run_cli(monkeypatch, capsys, "chain", "--corpus", "Gn:3")
        assert "layers: 3" in out.splitlines()

    def test_chain_uncountable(self, monkeypatch, capsys):
        code, out, _ = run_cli(monkeypatch, capsys, "chain", "--corpus", "rose:2", "--json")
        assert code == 0
        assert "uncountable" in json.loads(out)["chain"]["verdict"]

    def test_socle(self, monkeypatch, capsys):
        _, out, _ = run_cli(monkeypatch, capsys, "socle", "--corpus", "G1")
        assert out.strip() == "M_3(K[x,x^-1])(0,1,2) @ v13"

    def test_classify(self, monkeypatch, capsys, line2_file):
        _, out, _ = run_cli(monkeypatch, capsys, "classify", line2_file)
        assert out.startswith("vertex")

    def test_nf(self, monkeypatch, capsys, g1_file):
        code, out, _ = run_cli(monkeypatch, capsys, "nf", "e1 e1^*", g1_file)
        assert code == 0
        assert out.strip() == "v11"

    def test_nf_json(self, monkeypatch, capsys, g1_file):
        _, out, _ = run_cli(monkeypatch, capsys, "nf", "e1 + e1^*", g1_file, "--json")
        assert json.loads(out) == {"expression": "e1 + e1^*", "normal_form": "e1^* + e1", "degrees": [-1, 1]}

    def test_nf_with_special_edges(self, monkeypatch, capsys, tmp_path):
        graph = tmp_path / "rose.txt"
        graph.write_text(ROSE2_TEXT, encoding="utf-8")
        special = tmp_path / "special.yaml"
        special.write_text("v: h\n", encoding="utf-8")
        _, out, _ = run_cli(monkeypatch, capsys, "nf", "h h^*", str(graph), "--special-edges", str(special))
        assert out.strip() == "v - g g^*"

    def test_module(self, monkeypatch, capsys, line2_file):
        _, out, _ = run_cli(monkeypatch, capsys, "module", "v2", line2_file)
        assert out.strip() == "module N_v2: dim 2; degrees (0,1); relations pass; graded simple yes"


class TestInputSources:
    def test_stdin(self, monkeypatch, capsys):
        monkeypatch.setattr(sys, "stdin", io.StringIO(G1_TEXT))
        code, out, _ = run_cli(monkeypatch, capsys, "naimark")
        assert code == 0
        assert out.startswith("HOLDS; witness v13")

    def test_batch_text(self, monkeypatch, capsys, g1_file, line2_file):
        _, out, _ = run_cli(monkeypatch, capsys, "socle", g1_file, line2_file)
        assert f"== {g1_file} ==" in out
        assert f"== {line2_file} ==" in out
        assert "M_2(K)(0,1) @ v2" in out

    def test_batch_json(self, monkeypatch, capsys, g1_file, line2_file):
        _, out, _ = run_cli(monkeypatch, capsys, "chain", g1_file, line2_file, "--json")
        data = json.loads(out)
        assert set(data) == {g1_file, line2_file}
        assert data[g1_file]["chain"]["verdict"] == {"count": 1}


class TestOptions:
    def test_max_path_len(self, monkeypatch, capsys):
        _, out, _ = run_cli(monkeypatch, capsys, "socle", "--corpus", "G2", "--max-path-len", "3")
        assert "bound 3" in out

    def test_config_file(self, monkeypatch, capsys, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("max_path_len: 4\n", encoding="utf-8")
        _, out, _ = run_cli(monkeypatch, capsys, "socle", "--corpus", "G2", "--config", str(config))
        assert "bound 4" in out

    def test_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("LPA_GRADED_MAX_PATH_LEN", "5")
        _, out, _ = run_cli(monkeypatch, capsys, "socle", "--corpus", "G2")
        assert "bound 5" in out

    def test_output_format_from_config(self, monkeypatch, capsys):
        monkeypatch.setenv("LPA_GRADED_OUTPUT_FORMAT", "json")
        _, out, _ = run_cli(monkeypatch, capsys, "socle", "--corpus", "G1")
        assert json.loads(out)["socle"][0]["anchor"]["vertex"] == "v13"


class TestCorpusCommand:
    def test_list(self, monkeypatch, capsys):
        _, out, _ = run_cli(monkeypatch, capsys, "corpus", "--list")
        assert out.split() == ["loop", "line", "rose", "G1", "G2", "G3", "Gn", "staircase",
                               "tworow_comet", "twosinks", "figure8"]

    def test_print_text(self, monkeypatch, capsys):
        _, out, _ = run_cli(monkeypatch, capsys, "corpus", "line:2")
        assert out == "graph line_2\nvertex v1 v2\nedge v1_v2_0 : v1 -> v2\n"

    def test_print_json(self, monkeypatch, capsys):
        _, out, _ = run_cli(monkeypatch, capsys, "corpus", "loop", "--json")
        assert json.loads(out)["edges"] == [{"id": "v_v_0", "source": "v", "range": "v"}]


class TestExitStatus:
    """0 for success, 1 for rejected input, 2 for internal invariant violations."""

    def test_parse_error(self, monkeypatch, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("vertex a\n", encoding="utf-8")
        code, _, err = run_cli(monkeypatch, capsys, "naimark", str(bad))
        assert code == 1
        assert err.startswith("error: line 1, column 1:")

    def test_missing_file(self, monkeypatch, capsys, tmp_path):
        code, _, err = run_cli(monkeypatch, capsys, "chain", str(tmp_path / "nope.txt"))
        assert code == 1
        assert "cannot read" in err

    def test_files_and_corpus(self, monkeypatch, capsys, g1_file):
        code, _, err = run_cli(monkeypatch, capsys, "naimark", g1_file, "--corpus", "G1")
        assert code == 1
        assert "not both" in err

    def test_unknown_corpus(self, monkeypatch, capsys):
        code, _, err = run_cli(monkeypatch, capsys, "chain", "--corpus", "G7")
        assert code == 1
        assert "unknown corpus graph" in err

    def test_bad_expression(self, monkeypatch, capsys, g1_file):
        code, _, err = run_cli(monkeypatch, capsys, "nf", "e1 x", g1_file)
        assert code == 1
        assert "column 4: unknown identifier x" in err

    def test_module_on_cycle_vertex(self, monkeypatch, capsys, g1_file):
        code, _, err = run_cli(monkeypatch, capsys, "module", "v13", g1_file)
        assert code == 1
        assert "is not a sink" in err

    def test_bad_config_value(self, monkeypatch, capsys):
        monkeypatch.setenv("LPA_GRADED_MAX_PATH_LEN", "zero")
        code, _, err = run_cli(monkeypatch, capsys, "chain", "--corpus", "G1")
        assert code == 1
        assert "LPA_GRADED_MAX_PATH_LEN" in err

    def test_invariant_violation(self, monkeypatch, capsys):
        def broken(g, bound):
            raise InvariantViolation("layers overlap")

        monkeypatch.setattr(cli, "socular_chain", broken)
        code, _, err = run_cli(monkeypatch, capsys, "chain", "--corpus", "G1")
        assert code == 2
        assert err.strip() == "internal invariant violated: layers overlap"


class TestSelfcheckCommand:
    def test_single_suite(self, monkeypatch, capsys):
        code, out, _ = run_cli(monkeypatch, capsys, "selfcheck", "--only", "S16")
        assert code == 0
        assert out.splitlines()[-1] == "passed 1/1"

    def test_json_summary(self, monkeypatch, capsys):
        code, out, _ = run_cli(monkeypatch, capsys, "selfcheck", "--only", "S06", "S16", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["passed_suites"] == ["S06", "S16"]
        assert data["pass_rate"] == 1.0

    def test_unknown_suite(self, monkeypatch, capsys):
        code, _, err = run_cli(monkeypatch, capsys, "selfcheck", "--only", "S99")
        assert code == 1
        assert "S99" in err
