"""In-process integer counters for enumeration and verification work."""

from __future__ import annotations

from typing import Dict, Mapping, Optional


_COUNTERS: Dict[str, int] = {}


def inc(name: str, value: int = 1) -> None:
    _COUNTERS[name] = _COUNTERS.get(name, 0) + value


def merge(counts: Mapping[str, int]) -> None:
    """Fold counters produced elsewhere (e.g. by a worker process) into ours."""
    for name, value in counts.items():
        inc(name, value)


def get(name: str) -> int:
    return _COUNTERS.get(name, 0)


def get_all() -> Dict[str, int]:
    return dict(_COUNTERS)


def snapshot(prefix: Optional[str] = None) -> Dict[str, int]:
    if prefix is None:
        return dict(sorted(_COUNTERS.items()))
    return {k: v for k, v in sorted(_COUNTERS.items()) if k.startswith(prefix)}


def clear() -> None:
    _COUNTERS.clear()


__all__ = ["inc", "merge", "get", "get_all", "snapshot", "clear"]
