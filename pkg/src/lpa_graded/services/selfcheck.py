"""
Self-check runner: loads property suites from YAML and reports pass/fail per suite.
"""

import logging
import random
import sys
import time
from pathlib import Path
from typing import Any, Dict, Iterable, Optional

import yaml

from ..utils.errors import ConfigError, InputError
from .properties import PROPERTIES

logger = logging.getLogger(__name__)

BUILTIN_SUITE = Path(__file__).resolve().parent.parent / "suites" / "selfcheck.yaml"


def load_suite(suite_path: Optional[str] = None) -> Dict[str, Any]:
    """Load a suite file; the packaged suite when no path is given."""
    path = Path(suite_path) if suite_path else BUILTIN_SUITE
    try:
        with open(path, "r", encoding="utf-8") as f:
            suite = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"cannot read suite file {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"malformed suite file {path}: {e}") from e
    if not isinstance(suite, dict) or not isinstance(suite.get("suites"), list):
        raise ConfigError(f"suite file {path} must map `suites` to a list")
    for entry in suite["suites"]:
        if entry.get("property") not in PROPERTIES:
            raise ConfigError(f"suite {entry.get('suite_id', '?')}: unknown property {entry.get('property')!r}")
    return suite


def run_selfcheck(
    suite_path: Optional[str] = None,
    only: Optional[Iterable[str]] = None,
    seed: Optional[int] = None,
    verbose: bool = False,
) -> Dict[str, Any]:
    """Run every suite (or those named in `only`) and summarize."""
    suite = load_suite(suite_path)
    suite_name = suite.get("name", "self-check")
    base_seed = seed if seed is not None else int(suite.get("seed", 0))
    selected = set(only) if only else None
    entries = [s for s in suite["suites"] if selected is None or s["suite_id"] in selected]
    if selected is not None:
        unknown = selected - {s["suite_id"] for s in suite["suites"]}
        if unknown:
            raise InputError(f"unknown suite id(s): {', '.join(sorted(unknown))}")

    per_suite: Dict[str, Dict[str, Any]] = {}
    passed_suites, failed_suites = [], []

    if verbose:
        print(f"Running: {suite_name}", file=sys.stderr)
        print("-" * 60, file=sys.stderr)

    for index, entry in enumerate(entries):
        suite_id = entry["suite_id"]
        if verbose:
            print(f"  [{suite_id}] {entry['property']} ", end="", file=sys.stderr, flush=True)
        rng = random.Random(base_seed + index)
        started = time.perf_counter()
        result = PROPERTIES[entry["property"]](entry.get("params") or {}, rng)
        elapsed = time.perf_counter() - started
        logger.info(
            f"[SELFCHECK] suite={suite_id} property={entry['property']} "
            f"checked={result.checked} violations={len(result.violations)} seconds={elapsed:.2f}"
        )
        per_suite[suite_id] = {
            "pass": result.passed,
            "property": entry["property"],
            "description": entry.get("description", ""),
            "expected_outcome": entry.get("expected_outcome", ""),
            "checked": result.checked,
            "violations": result.violations[:3],
        }
        (passed_suites if result.passed else failed_suites).append(suite_id)
        if verbose:
            status = "PASS" if result.passed else f"FAIL ({len(result.violations)} violation(s))"
            print(f"{status} [{result.checked} checks, {elapsed:.1f}s]", file=sys.stderr)

    total = len(entries)
    pass_rate = len(passed_suites) / total if total > 0 else 0.0

    if verbose:
        print("-" * 60, file=sys.stderr)
        print(f"Results: {len(passed_suites)}/{total} passed ({pass_rate*100:.1f}%)", file=sys.stderr)

    return {
        "suite_name": suite_name,
        "seed": base_seed,
        "total_suites": total,
        "passed_suites": passed_suites,
        "failed_suites": failed_suites,
        "pass_rate": pass_rate,
        "per_suite": per_suite,
    }
