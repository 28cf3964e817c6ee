"""Validated inputs shared by the formula, census and oracle engines."""

from __future__ import annotations

from dataclasses import dataclass

from ..arith.gf import is_prime
from ..core.errors import ValidationError


@dataclass(frozen=True, slots=True)
class RamificationInput:
    """(p, e) with e = (p-1)*e_0 + e_1 and 0 <= e_1 <= p-2."""

    p: int
    e: int
    e_0: int
    e_1: int

    def __str__(self) -> str:
        return f"p={self.p}, e={self.e} (e_0={self.e_0}, e_1={self.e_1})"


@dataclass(frozen=True, slots=True)
class WeightDecomposition:
    n: int
    n_0: int
    n_1: int
    n_0p: int
    n_1p: int


@dataclass(frozen=True, slots=True)
class ModelCount:
    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValidationError(f"count must be nonnegative, got {self.value}", argument="value")

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def check_prime(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise ValidationError(f"must be a prime, got {p!r}", argument="p")
    if p == 2:
        raise ValidationError("p = 2 is not supported; p must be an odd prime", argument="p")


def decompose_e(p: int, e: int) -> RamificationInput:
    check_prime(p)
    if isinstance(e, bool) or not isinstance(e, int) or e < 1:
        raise ValidationError(f"must be a positive integer, got {e!r}", argument="e")
    e_0, e_1 = divmod(e, p - 1)
    return RamificationInput(p=p, e=e, e_0=e_0, e_1=e_1)


def decompose_n(inp: RamificationInput, n: int) -> WeightDecomposition:
    """Both decompositions of n; the primed one floors, so n_0' = -1 exactly when n < e_1."""
    if n < 0:
        raise ValidationError(f"must be >= 0, got {n}", argument="n")
    n_0, n_1 = divmod(n, inp.p - 1)
    n_0p, n_1p = divmod(n - inp.e_1, inp.p - 1)
    return WeightDecomposition(n=n, n_0=n_0, n_1=n_1, n_0p=n_0p, n_1p=n_1p)


def prime_power_exponent(q: int, p: int) -> int:
    """Return k >= 1 with q = p^k; reject anything else."""
    if isinstance(q, bool) or not isinstance(q, int) or q < p:
        raise ValidationError(f"{q!r} is not a positive power of {p}", argument="q")
    k = 0
    n = q
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise ValidationError(f"{q} is not a power of {p}", argument="q")
    return k


def cell_range(inp: RamificationInput, s: int, t: int) -> None:
    if not (0 <= s <= inp.e_0 and 0 <= t <= inp.e_0):
        raise ValidationError(f"cell ({s}, {t}) outside [0, {inp.e_0}]^2", argument="s,t")


__all__ = [
    "RamificationInput",
    "WeightDecomposition",
    "ModelCount",
    "check_prime",
    "decompose_e",
    "decompose_n",
    "prime_power_exponent",
    "cell_range",
]
