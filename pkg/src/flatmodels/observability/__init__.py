"""Observability helpers: structured logs and in-process counters."""

from . import metrics
from .logging import FlatModelsLogger, get_logger, set_verbose

__all__ = ["FlatModelsLogger", "get_logger", "metrics", "set_verbose"]
