from __future__ import annotations

from typing import Any

import yaml
from pydantic import ValidationError as PydanticValidationError

from ..core.errors import ConfigError
from .models import FlatModelsConfig


def _set_by_path(data: dict, path: list[str], value: Any) -> None:
    cur = data
    for key in path[:-1]:
        if not isinstance(cur.get(key), dict):
            cur[key] = {}
        cur = cur[key]
    cur[path[-1]] = value


def _parse_set_item(item: str) -> tuple[list[str], Any]:
    """Parse a single --set "key.path=value" string.

    - Uses first '=' as separator.
    - Key path split by '.' into a list.
    - Value parsed via YAML safe_load for rich types.
    """
    if "=" not in item:
        raise ConfigError(f"Invalid --set override (missing '='): {item!r}")
    key, raw = item.split("=", 1)
    path = [p for p in key.strip().split(".") if p]
    if not path:
        raise ConfigError(f"Invalid --set override (empty key path): {item!r}")
    try:
        value = yaml.safe_load(raw)
    except yaml.YAMLError as exc:
        raise ConfigError(f"Invalid --set value in {item!r}: {exc}") from exc
    return path, value


def parse_set_overrides(sets: list[str] | None) -> dict[str, Any]:
    """Convert a list of --set items into a nested dict suitable for deep merging."""
    result: dict[str, Any] = {}
    for item in sets or []:
        path, value = _parse_set_item(item)
        _set_by_path(result, path, value)
    return result


def _deep_merge(dst: dict, src: dict) -> dict:
    for k, v in src.items():
        if isinstance(v, dict) and isinstance(dst.get(k), dict):
            _deep_merge(dst[k], v)
        else:
            dst[k] = v
    return dst


def load_config(
    path: str | None = None,
    *,
    set_overrides: list[str] | None = None,
) -> FlatModelsConfig:
    """Load settings from optional YAML, then --set items.

    Suites named in the file are merged over the built-in ones, so a file may
    tweak a single field of ``suites.desk`` without restating the rest.
    """
    data: dict[str, Any] = {}
    if path:
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except OSError as exc:
            raise ConfigError(f"Cannot read config {path}: {exc}") from exc
        except yaml.YAMLError as exc:
            raise ConfigError(f"Invalid YAML in {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"Config {path} must be a mapping at the top level")

    if set_overrides:
        _deep_merge(data, parse_set_overrides(set_overrides))

    base = FlatModelsConfig().model_dump()
    merged = _deep_merge(base, data)
    try:
        return FlatModelsConfig.model_validate(merged)
    except PydanticValidationError as exc:
        raise ConfigError(f"Invalid configuration: {exc}") from exc


__all__ = ["load_config", "parse_set_overrides"]
