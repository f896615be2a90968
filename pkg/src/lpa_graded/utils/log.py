"""
Logging setup and stderr progress lines.
"""

import logging
import os
import sys

LOG_FORMAT = "[%(levelname)s] %(name)s: %(message)s"

# Third-party loggers kept quiet unless something goes wrong.
_QUIET_LIBRARIES = ("networkx", "yaml")


def configure_logging(level: str = "WARNING") -> None:
    """Install a single stderr handler on the package logger."""
    root = logging.getLogger("lpa_graded")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
    root.propagate = False
    for name in _QUIET_LIBRARIES:
        logging.getLogger(name).setLevel(logging.ERROR)


def progress(msg: str) -> None:
    """Print progress message to stderr unless LPA_GRADED_QUIET=1."""
    if os.environ.get("LPA_GRADED_QUIET") != "1":
        print(f"[PROGRESS] {msg}", file=sys.stderr)
