"""
Configuration management: defaults, config file, environment, CLI flags.
"""

import os
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, Optional

import yaml

from .utils.errors import ConfigError

ENV_PREFIX = "LPA_GRADED_"


def _positive_int(value: Any) -> int:
    number = int(value)
    if number <= 0:
        raise ValueError(f"expected a positive integer, got {value!r}")
    return number


def _output_format(value: Any) -> str:
    text = str(value).lower()
    if text not in ("text", "json"):
        raise ValueError(f"expected 'text' or 'json', got {value!r}")
    return text


_CONVERTERS: Dict[str, Callable[[Any], Any]] = {
    "max_path_len": _positive_int,
    "rewrite_bound": _positive_int,
    "hsat_bruteforce_limit": _positive_int,
    "oracle_dim_limit": _positive_int,
    "log_level": lambda value: str(value).upper(),
    "output_format": _output_format,
}


class Config:
    """
    Configuration manager.

    Precedence, lowest first: defaults, config file (YAML or JSON),
    environment variables prefixed LPA_GRADED_, explicit `set` calls.
    Environment values go through the same converters as file values.
    """

    def __init__(self, config_file: Optional[str] = None, environ: Optional[Mapping[str, str]] = None):
        self.config_file = config_file
        self._config: Dict[str, Any] = {}
        self._load_defaults()
        if config_file:
            self.load_from_file(config_file)
        self._load_from_env(os.environ if environ is None else environ)

    def _load_defaults(self) -> None:
        self._config = {
            "max_path_len": 20,
            "rewrite_bound": 32,
            "hsat_bruteforce_limit": 12,
            "oracle_dim_limit": 64,
            "log_level": "WARNING",
            "output_format": "text",
        }

    def _convert(self, key: str, value: Any, source: str) -> Any:
        if key not in _CONVERTERS:
            raise ConfigError(f"unknown configuration key {key!r} in {source}")
        try:
            return _CONVERTERS[key](value)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"invalid value for {key} in {source}: {e}") from e

    def load_from_file(self, config_file: str) -> None:
        """Merge a YAML or JSON mapping; JSON parses as YAML."""
        path = Path(config_file)
        try:
            with open(path, "r", encoding="utf-8") as f:
                file_config = yaml.safe_load(f) or {}
        except OSError as e:
            raise ConfigError(f"cannot read config file {path}: {e}") from e
        except yaml.YAMLError as e:
            raise ConfigError(f"malformed config file {path}: {e}") from e
        if not isinstance(file_config, dict):
            raise ConfigError(f"config file {path} must contain a mapping")
        for key, value in file_config.items():
            self._config[key] = self._convert(key, value, str(path))

    def _load_from_env(self, environ: Mapping[str, str]) -> None:
        for key in _CONVERTERS:
            env_var = f"{ENV_PREFIX}{key.upper()}"
            value = environ.get(env_var)
            if value is not None:
                self._config[key] = self._convert(key, value, env_var)

    def get(self, key: str, default: Any = None) -> Any:
        return self._config.get(key, default)

    def set(self, key: str, value: Any) -> None:
        self._config[key] = self._convert(key, value, "override")

    def to_dict(self) -> Dict[str, Any]:
        return self._config.copy()


def load_special_edges(path: str) -> Dict[str, str]:
    """Read a vertex -> special edge mapping from a YAML or JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except OSError as e:
        raise ConfigError(f"cannot read special-edges file {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"malformed special-edges file {path}: {e}") from e
    if not isinstance(data, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in data.items()
    ):
        raise ConfigError(f"special-edges file {path} must map vertex ids to edge ids")
    return dict(data)
