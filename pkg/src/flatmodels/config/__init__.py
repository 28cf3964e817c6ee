"""Configuration models and loader."""

from .loader import load_config, parse_set_overrides
from .models import FlatModelsConfig, OracleSettings, RunConfig, SuiteSettings

__all__ = ["FlatModelsConfig", "OracleSettings", "RunConfig", "SuiteSettings", "load_config", "parse_set_overrides"]
