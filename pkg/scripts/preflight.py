#!/usr/bin/env python3
"""
Preflight verifier for lpa-graded.
Runs fast checks before the test suite to fail fast with clear messages.
"""

import importlib
import sys
from pathlib import Path


def check_python_version():
    """Check Python version is >= 3.9."""
    if sys.version_info < (3, 9):
        print(f"[PREFLIGHT] ERROR: Python 3.9+ required, found {sys.version_info.major}.{sys.version_info.minor}", file=sys.stderr)
        return False
    return True


def check_imports():
    """Check required third-party imports succeed."""
    required_imports = [
        ("networkx", "networkx"),
        ("yaml", "PyYAML"),
    ]

    failed = []
    for module_name, display_name in required_imports:
        try:
            importlib.import_module(module_name)
        except ImportError as e:
            failed.append((display_name, str(e)))

    if failed:
        for display_name, error in failed:
            print(f"[PREFLIGHT] ERROR: {display_name} import failed: {error}", file=sys.stderr)
        return False

    return True


def check_package():
    """Check lpa_graded imports and its packaged suite file exists."""
    src = Path(__file__).resolve().parent.parent / "src"
    if src.is_dir() and str(src) not in sys.path:
        sys.path.insert(0, str(src))
    try:
        package = importlib.import_module("lpa_graded")
        selfcheck = importlib.import_module("lpa_graded.services.selfcheck")
    except ImportError as e:
        print(f"[PREFLIGHT] ERROR: lpa_graded import failed: {e}", file=sys.stderr)
        print("[PREFLIGHT] HINT: pip install -e . or add src/ to PYTHONPATH", file=sys.stderr)
        return False, None
    if not selfcheck.BUILTIN_SUITE.exists():
        print(f"[PREFLIGHT] ERROR: suite file missing: {selfcheck.BUILTIN_SUITE}", file=sys.stderr)
        return False, None
    return True, package.__version__


def main():
    """Run preflight checks."""
    if not check_python_version():
        sys.exit(1)

    if not check_imports():
        sys.exit(1)

    ok, version = check_package()
    if not ok:
        sys.exit(1)

    print(f"[PREFLIGHT] ok: networkx yaml lpa_graded={version}", file=sys.stderr)
    sys.exit(0)


if __name__ == "__main__":
    main()
