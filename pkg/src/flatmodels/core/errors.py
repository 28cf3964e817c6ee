from __future__ import annotations

from typing import Any, Optional


class FlatModelsError(Exception):
    """Base exception for the flat-models toolkit."""

    def __init__(self, message: str = "") -> None:
        super().__init__(message)
        self.message = message


class ValidationError(FlatModelsError):
    def __init__(self, message: str, *, argument: Optional[str] = None) -> None:
        if argument and not message.startswith((f"{argument}:", f"{argument} ")):
            message = f"{argument}: {message}"
        super().__init__(message)
        self.argument = argument


class ConfigError(FlatModelsError):
    pass


class SpecMismatchError(ValidationError):
    """Raised when Laurent polynomials over different fields are combined."""


class CapExceededError(ValidationError):
    pass


class FieldDomainError(FlatModelsError, ZeroDivisionError):
    pass


class InvariantError(FlatModelsError):
    """An internal cross-check failed; the computation cannot be trusted."""


class CensusInconsistencyError(InvariantError):
    pass


class FormulaCheckError(InvariantError):
    pass


class CrossCheckError(InvariantError):
    def __init__(self, message: str, *, s: int, t: int, v: Any) -> None:
        super().__init__(f"{message} (s={s}, t={t}, v={v})")
        self.s = s
        self.t = t
        self.v = v


EXIT_CODES: dict[type[FlatModelsError], int] = {
    FlatModelsError: 1,
    ValidationError: 1,
    ConfigError: 1,
    FieldDomainError: 1,
    InvariantError: 2,
}


def get_exit_code(exc: FlatModelsError) -> int:
    for cls in exc.__class__.__mro__:
        if cls in EXIT_CODES:
            return EXIT_CODES[cls]  # type: ignore[index]
    return 1


__all__ = [
    "FlatModelsError",
    "ValidationError",
    "ConfigError",
    "SpecMismatchError",
    "CapExceededError",
    "FieldDomainError",
    "InvariantError",
    "CensusInconsistencyError",
    "FormulaCheckError",
    "CrossCheckError",
    "EXIT_CODES",
    "get_exit_code",
]
