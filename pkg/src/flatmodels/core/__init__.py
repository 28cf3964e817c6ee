"""Core helpers shared across flat-models packages."""

from .errors import (
    CapExceededError,
    CensusInconsistencyError,
    ConfigError,
    CrossCheckError,
    FieldDomainError,
    FlatModelsError,
    FormulaCheckError,
    InvariantError,
    SpecMismatchError,
    ValidationError,
    get_exit_code,
)

__all__ = [
    "CapExceededError",
    "CensusInconsistencyError",
    "ConfigError",
    "CrossCheckError",
    "FieldDomainError",
    "FlatModelsError",
    "FormulaCheckError",
    "InvariantError",
    "SpecMismatchError",
    "ValidationError",
    "get_exit_code",
]
