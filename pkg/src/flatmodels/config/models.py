from __future__ import annotations

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


OutputFormat = Literal["plain", "json", "csv"]
Subcommand = Literal["count", "table", "zeta", "dim", "census", "oracle", "verify"]


class OracleSettings(BaseModel):
    """Safety caps and defaults for brute-force enumeration."""

    max_e: int = Field(default=8, ge=1)
    max_candidates: int = Field(default=10**8, ge=1, description="cap on q^(e+e_0+1)")
    prune: bool = False
    workers: int = Field(default=1, ge=1)

    model_config = ConfigDict(extra="forbid")


class OutputSettings(BaseModel):
    format: OutputFormat = "plain"

    model_config = ConfigDict(extra="forbid")


class OracleRun(BaseModel):
    """Brute-force sweep over e_min..e_max at q = p^k."""

    p: int
    e_min: int = Field(default=1, ge=1)
    e_max: int = Field(ge=1)
    k: int = Field(default=1, ge=1)
    prune: bool = False

    model_config = ConfigDict(extra="forbid")


class ExtensionRun(BaseModel):
    """Oracle over GF(p^m) compared with the degree-m point count predicted from q = p."""

    p: int
    e_max: int = Field(ge=1)
    m: int = Field(default=2, ge=2)
    prune: bool = True

    model_config = ConfigDict(extra="forbid")


class SuiteSettings(BaseModel):
    sweep_primes: List[int]
    sweep_e_max: int = Field(ge=1)
    singleton_primes: List[int]
    example_primes: List[int]
    aut_primes: List[int]
    oracle_runs: List[OracleRun] = Field(default_factory=list)
    extension_runs: List[ExtensionRun] = Field(default_factory=list)
    pruning_runs: List[OracleRun] = Field(default_factory=list)
    cancellation_runs: List[OracleRun] = Field(default_factory=list)
    zeta_terms: int = Field(default=6, ge=1)

    model_config = ConfigDict(extra="forbid")


def default_suites() -> Dict[str, SuiteSettings]:
    primes = [3, 5, 7, 11, 13]
    return {
        "desk": SuiteSettings(
            sweep_primes=primes,
            sweep_e_max=40,
            singleton_primes=primes,
            example_primes=primes,
            aut_primes=[3, 5, 7],
            oracle_runs=[
                OracleRun(p=3, e_max=6),
                OracleRun(p=3, e_max=4, k=2, prune=True),
                OracleRun(p=5, e_max=6),
            ],
            extension_runs=[ExtensionRun(p=3, e_max=4)],
            pruning_runs=[OracleRun(p=3, e_max=4)],
            cancellation_runs=[OracleRun(p=3, e_max=6), OracleRun(p=5, e_max=4)],
        ),
        "quick": SuiteSettings(
            sweep_primes=[3, 5, 7],
            sweep_e_max=12,
            singleton_primes=[3, 5, 7],
            example_primes=[3, 5, 7],
            aut_primes=[3, 5],
            oracle_runs=[OracleRun(p=3, e_max=3), OracleRun(p=5, e_max=4)],
            extension_runs=[ExtensionRun(p=3, e_max=2)],
            pruning_runs=[OracleRun(p=3, e_max=3)],
            cancellation_runs=[OracleRun(p=3, e_max=3)],
            zeta_terms=4,
        ),
    }


class FlatModelsConfig(BaseModel):
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)
    suites: Dict[str, SuiteSettings] = Field(default_factory=default_suites)

    model_config = ConfigDict(extra="forbid")


class RunConfig(BaseModel):
    """One validated CLI invocation."""

    subcommand: Subcommand
    p: List[int] = Field(default_factory=list)
    e: Optional[int] = None
    e_min: Optional[int] = None
    e_max: Optional[int] = None
    k: List[int] = Field(default_factory=lambda: [1])
    q: Optional[int] = None
    format: OutputFormat = "plain"
    output: Optional[str] = None
    prune: bool = False
    workers: int = Field(default=1, ge=1)
    allow_large: bool = False
    census_sum: bool = False
    suite: str = "desk"
    zeta_terms: int = Field(default=0, ge=0)

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def _check_ranges(self) -> "RunConfig":
        if self.subcommand == "verify":
            return self
        if not self.p:
            raise ValueError("--p is required")
        if self.subcommand != "table" and len(self.p) != 1:
            raise ValueError("exactly one --p is allowed for this subcommand")
        if any(k < 1 for k in self.k) or not self.k:
            raise ValueError("--k must be a positive integer")
        if self.q is not None and self.k != [1]:
            raise ValueError("--q and --k are mutually exclusive")
        if self.subcommand == "table":
            if self.e is None and (self.e_min is None or self.e_max is None):
                raise ValueError("table needs --e or both --e-min and --e-max")
            lo, hi = self.e_range()
            if lo < 1 or lo > hi:
                raise ValueError(f"empty e range {lo}..{hi}")
        elif self.e is None:
            raise ValueError("--e is required")
        return self

    def e_range(self) -> tuple[int, int]:
        if self.e is not None:
            return self.e, self.e
        assert self.e_min is not None and self.e_max is not None
        return self.e_min, self.e_max


__all__ = [
    "OutputFormat",
    "Subcommand",
    "OracleSettings",
    "OutputSettings",
    "OracleRun",
    "ExtensionRun",
    "SuiteSettings",
    "FlatModelsConfig",
    "RunConfig",
    "default_suites",
]
