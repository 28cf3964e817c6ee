"""Structured logging for flat-models operations.

Records are JSON objects written to stderr; stdout is reserved for data output.
"""

import json
import logging
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional

logger = logging.getLogger("flatmodels")
logger.setLevel(logging.WARNING)

# Prevent duplicate handlers
if not logger.handlers:
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("%(name)s - %(levelname)s - %(message)s"))
    logger.addHandler(handler)


class FlatModelsLogger:
    """Structured logger emitting one JSON payload per record."""

    def __init__(self, name: str = "flatmodels", verbose: bool = False):
        self.logger = logging.getLogger(name)
        if verbose:
            self.logger.setLevel(logging.DEBUG)

    def _log_structured(self, level: int, message: str, **kwargs: Any) -> None:
        log_entry: Dict[str, Any] = {
            "message": message,
            "level": logging.getLevelName(level),
        }
        if kwargs:
            log_entry["context"] = kwargs
        self.logger.log(level, json.dumps(log_entry, default=str))

    def debug(self, message: str, **kwargs: Any) -> None:
        self._log_structured(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs: Any) -> None:
        self._log_structured(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        self._log_structured(logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        self._log_structured(logging.ERROR, message, **kwargs)

    @contextmanager
    def operation(self, operation_name: str, **context: Any) -> Iterator["FlatModelsLogger"]:
        """Log start, completion and failure of an operation with its duration."""
        start_time = time.perf_counter()
        self.debug(f"Starting {operation_name}", operation=operation_name, **context)

        try:
            yield self
        except Exception as e:
            duration = time.perf_counter() - start_time
            self.error(
                f"Operation {operation_name} failed",
                operation=operation_name,
                error=str(e),
                duration_ms=duration * 1000,
                **context,
            )
            raise
        else:
            duration = time.perf_counter() - start_time
            self.info(
                f"Completed {operation_name}",
                operation=operation_name,
                duration_ms=duration * 1000,
                **context,
            )


_loggers: Dict[str, FlatModelsLogger] = {}


def get_logger(name: str = "flatmodels", verbose: Optional[bool] = None) -> FlatModelsLogger:
    """Get or create a structured logger under the ``flatmodels`` namespace."""
    if name != "flatmodels" and not name.startswith("flatmodels."):
        name = f"flatmodels.{name}"
    if name not in _loggers:
        _loggers[name] = FlatModelsLogger(name, bool(verbose))
    elif verbose:
        set_verbose(True)
    return _loggers[name]


def set_verbose(verbose: bool) -> None:
    """Switch the package logger between DEBUG and WARNING."""
    logging.getLogger("flatmodels").setLevel(logging.DEBUG if verbose else logging.WARNING)


__all__ = ["FlatModelsLogger", "get_logger", "set_verbose"]
