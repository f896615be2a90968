"""
Tests for the property suites and the self-check runner.
"""

import random

import pytest
import yaml

from lpa_graded.services import properties
from lpa_graded.services.properties import PROPERTIES, PropertyResult
from lpa_graded.services.selfcheck import BUILTIN_SUITE, load_suite, run_selfcheck
from lpa_graded.utils.errors import ConfigError, InputError

SMALL_PARAMS = {
    "closure_oracle": {"graphs": 10, "max_vertices": 5, "subsets": 5},
    "closure_laws": {"graphs": 10, "max_vertices": 5},
    "downward_directed_oracle": {"graphs": 10, "max_vertices": 5},
    "cycle_exits": {"graphs": 10, "max_vertices": 5},
    "quotient_laws": {"graphs": 10, "max_vertices": 5},
    "cuntz_krieger_relations": {"corpus": ["G1", "rose:2", "line:3"]},
    "associativity": {"triples": 10, "corpus": ["G1", "rose:2"]},
    "confluence": {"orders": 10, "corpus": ["rose:2", "G2"]},
    "anti_multiplicativity": {"triples": 10, "corpus": ["G1"]},
    "grading_additivity": {"pairs": 30, "corpus": ["rose:2"]},
    "socle_block_count": {"graphs": 10, "max_vertices": 5, "corpus": ["G1"]},
    "witness_corpus": {"corpus": ["loop"], "bound": 4, "random_graphs": 2, "max_vertices": 5, "random_bound": 3},
    "sink_modules": {"corpus": ["line:3"], "random_graphs": 2, "max_vertices": 5},
    "tail_equivalence_laws": {"samples": 5, "corpus": ["rose:2", "G1"]},
    "naimark_consistency": {"graphs": 10, "max_vertices": 5, "gn_max": 3, "corpus": ["G1", "G2"]},
    "corpus_round_trip": {"graphs": 5, "corpus": ["G3"]},
    "matrix_grading_additivity": {"blocks": 10, "pairs": 10},
}


class TestProperties:
    """Every registered property passes on a small seeded sample."""

    def test_every_property_has_small_params(self):
        assert set(SMALL_PARAMS) == set(PROPERTIES)

    def test_sink_modules_skip_oversized_modules(self, monkeypatch):
        def refuse(module, *args):
            raise AssertionError(f"oracle reached a module of dimension {module.dim}")

        monkeypatch.setattr(properties, "graded_simplicity_oracle", refuse)
        params = {"corpus": ["line:6"], "random_graphs": 0, "max_dim": 3}
        result = properties.sink_modules(params, random.Random(1))
        assert result.passed
        assert result.checked == 0

    @pytest.mark.parametrize("name", sorted(SMALL_PARAMS))
    def test_property_passes(self, name):
        result = PROPERTIES[name](SMALL_PARAMS[name], random.Random(1234))
        assert result.passed, result.violations[:3]
        assert result.checked > 0

    def test_property_result(self):
        result = PropertyResult()
        result.expect(True, "fine")
        result.expect(False, "broken")
        assert result.checked == 2
        assert not result.passed
        assert result.violations == ["broken"]


class TestSuiteFile:
    def test_builtin_suite(self):
        suite = load_suite()
        ids = [entry["suite_id"] for entry in suite["suites"]]
        assert ids == [f"S{i:02d}" for i in range(1, 18)]
        assert {entry["property"] for entry in suite["suites"]} == set(PROPERTIES)
        assert BUILTIN_SUITE.name == "selfcheck.yaml"

    def test_unknown_property(self, tmp_path):
        path = tmp_path / "suite.yaml"
        path.write_text(yaml.safe_dump({"suites": [{"suite_id": "X1", "property": "nope"}]}), encoding="utf-8")
        with pytest.raises(ConfigError, match="unknown property 'nope'"):
            load_suite(str(path))

    def test_missing_suites_list(self, tmp_path):
        path = tmp_path / "suite.yaml"
        path.write_text("name: empty\n", encoding="utf-8")
        with pytest.raises(ConfigError, match="must map `suites` to a list"):
            load_suite(str(path))

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(ConfigError, match="cannot read suite file"):
            load_suite(str(tmp_path / "absent.yaml"))


class TestRunner:
    """Summaries keyed by suite id."""

    def test_subset_of_builtin_suite(self):
        report = run_selfcheck(only=["S06", "S16"])
        assert report["total_suites"] == 2
        assert report["failed_suites"] == []
        assert report["pass_rate"] == 1.0
        entry = report["per_suite"]["S16"]
        assert entry["pass"] is True
        assert entry["property"] == "corpus_round_trip"
        assert entry["checked"] > 0

    def test_custom_suite(self, tmp_path):
        suite = {
            "name": "small",
            "seed": 99,
            "suites": [
                {"suite_id": "A", "property": "closure_laws", "params": SMALL_PARAMS["closure_laws"]},
                {"suite_id": "B", "property": "confluence", "params": SMALL_PARAMS["confluence"]},
            ],
        }
        path = tmp_path / "suite.yaml"
        path.write_text(yaml.safe_dump(suite), encoding="utf-8")
        report = run_selfcheck(str(path))
        assert report["suite_name"] == "small"
        assert report["seed"] == 99
        assert report["passed_suites"] == ["A", "B"]

    def test_seed_override(self):
        assert run_selfcheck(only=["S16"], seed=5)["seed"] == 5

    def test_unknown_suite_id(self):
        with pytest.raises(InputError, match="unknown suite id"):
            run_selfcheck(only=["S42"])

    def test_verbose_output(self, capsys):
        run_selfcheck(only=["S16"], verbose=True)
        err = capsys.readouterr().err
        assert "[S16] corpus_round_trip" in err
        assert "Results: 1/1 passed" in err
