"""Closed-form count of finite flat models and the data derived from it.

For q = |F| the count is sum_n (a_n + a_n') q^n, with a_n, a_n' read off the
decompositions e = (p-1)e_0 + e_1 and n = (p-1)n_0 + n_1 = (p-1)n_0' + n_1' + e_1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..arith.gf import FieldSpec, enumerate_elements, fe_mul, fe_sub, field_make
from ..core.errors import FormulaCheckError, ValidationError
from .census import max_h
from .inputs import (
    ModelCount,
    RamificationInput,
    WeightDecomposition,
    check_prime,
    decompose_e,
    decompose_n,
    prime_power_exponent,
)


@dataclass(frozen=True, slots=True)
class CoefficientTable:
    input: RamificationInput
    a: tuple[int, ...]
    a_prime: tuple[int, ...]

    @property
    def c(self) -> tuple[int, ...]:
        return tuple(x + y for x, y in zip(self.a, self.a_prime))

    def evaluate(self, q: int) -> int:
        return sum(c_n * q**n for n, c_n in enumerate(self.c))


@dataclass(frozen=True, slots=True)
class ZetaFactors:
    """Z(T) = prod_n (1 - q^n T)^(-c_n) over the listed (n, c_n)."""

    factors: tuple[tuple[int, int], ...]
    q: int

    def point_count(self, m: int = 1) -> int:
        """Number of points over the degree-m extension GF(q^m)."""
        if m < 1:
            raise ValidationError(f"must be >= 1, got {m}", argument="m")
        return sum(c_n * self.q ** (m * n) for n, c_n in self.factors)

    def render(self) -> str:
        parts = []
        for n, c_n in self.factors:
            root = "T" if n == 0 else f"{self.q ** n}T"
            term = f"(1 - {root})"
            parts.append(term if c_n == 1 else f"{term}^{c_n}")
        return "Z(T) = 1 / (" + " * ".join(parts) + ")"


@dataclass(frozen=True, slots=True)
class ExampleBookkeeping:
    p: int
    total: int
    aut_order: int
    stabilizer_order: int
    middle_orbit: int


def _max0(x: int) -> int:
    return x if x > 0 else 0


def coeff_a(inp: RamificationInput, n: int) -> int:
    w = decompose_n(inp, n)
    base = inp.e_0 - (inp.p + 1) * w.n_0 - w.n_1
    value = _max0(base - 1)
    if w.n_1 in (0, 1):
        value += _max0(base + 1)
    return value


def coeff_a_prime(inp: RamificationInput, n: int) -> int:
    if n == 0 and inp.e_1 == inp.p - 2:
        return inp.e_0
    w = decompose_n(inp, n)
    base = inp.e_0 - inp.e_1 - (inp.p + 1) * w.n_0p - w.n_1p
    value = _max0(base - 2)
    if w.n_1p in (0, 1):
        value += _max0(base)
    return value


def coefficient_table(inp: RamificationInput) -> CoefficientTable:
    """a_n and a_n' for n = 0..e, checked to vanish past the largest cell weight."""
    a = tuple(coeff_a(inp, n) for n in range(inp.e + 1))
    a_prime = tuple(coeff_a_prime(inp, n) for n in range(inp.e + 1))
    table = CoefficientTable(input=inp, a=a, a_prime=a_prime)

    top = max_h(inp)
    stray = [n for n in range(top + 1, inp.e + 1) if a[n] or a_prime[n]]
    if stray:
        raise FormulaCheckError(
            f"{inp}: nonzero coefficients at n={stray} beyond the largest cell weight {top}; "
            f"a={list(a)}, a'={list(a_prime)}"
        )
    if table.c[0] < 1:
        raise FormulaCheckError(f"{inp}: constant coefficient is {table.c[0]}, expected >= 1")
    return table


def model_count(inp: RamificationInput, q: int) -> ModelCount:
    prime_power_exponent(q, inp.p)
    return ModelCount(coefficient_table(inp).evaluate(q))


def zeta_factors(inp: RamificationInput, q: int) -> ZetaFactors:
    prime_power_exponent(q, inp.p)
    c = coefficient_table(inp).c
    return ZetaFactors(factors=tuple((n, c_n) for n, c_n in enumerate(c) if c_n > 0), q=q)


def moduli_dimension(inp: RamificationInput) -> int:
    c = coefficient_table(inp).c
    return max(n for n, c_n in enumerate(c) if c_n > 0)


def zeta_series(factors: ZetaFactors, terms: int) -> list[int]:
    """First ``terms`` coefficients of Z(T) expanded from the product form."""
    series = [1] + [0] * (terms - 1)
    for n, c_n in factors.factors:
        root = factors.q**n
        # (1 - root T)^(-c_n) = sum_j C(c_n + j - 1, j) root^j T^j
        factor = [math.comb(c_n + j - 1, j) * root**j for j in range(terms)]
        series = [sum(series[i] * factor[j - i] for i in range(j + 1)) for j in range(terms)]
    return series


def zeta_series_from_counts(counts: Sequence[int]) -> list[int]:
    """Coefficients z_0..z_M of exp(sum_m N_m T^m / m) given N_1..N_M.

    Uses j z_j = sum_{m=1..j} N_m z_{j-m}; a non-integral coefficient means the
    counts do not come from a variety and is reported as a check failure.
    """
    z: list[Fraction] = [Fraction(1)]
    for j in range(1, len(counts) + 1):
        z.append(sum((counts[m - 1] * z[j - m] for m in range(1, j + 1)), Fraction(0)) / j)
    if any(x.denominator != 1 for x in z):
        raise FormulaCheckError(f"zeta coefficients are not integral: {z}")
    return [int(x) for x in z]


def gl2_order(spec: FieldSpec) -> int:
    """|GL_2(F)| by enumerating all 2x2 matrices."""
    elems = enumerate_elements(spec)
    return sum(
        1
        for a, b, c, d in itertools.product(elems, repeat=4)
        if not fe_sub(fe_mul(a, d, spec), fe_mul(b, c, spec), spec).is_zero()
    )


def borel_order(spec: FieldSpec) -> int:
    """Order of the invertible upper-triangular subgroup, by enumeration."""
    elems = enumerate_elements(spec)
    return sum(1 for a, _b, d in itertools.product(elems, repeat=3) if not fe_mul(a, d, spec).is_zero())


def example_decomposition(p: int, *, enumerate_groups: bool = True) -> ExampleBookkeeping:
    """Bookkeeping for K = Q_p(zeta_p), F = F_p: the count splits as 1 + (p+1) + 1.

    The middle orbit is GL_2(F_p) acting on identifications with Z/p + mu_p,
    whose automorphisms form the upper-triangular subgroup.
    """
    check_prime(p)
    total = model_count(decompose_e(p, p - 1), p).value
    aut_order = p * (p + 1) * (p - 1) ** 2
    stabilizer = p * (p - 1) ** 2
    if enumerate_groups:
        spec = field_make(p, 1)
        counted_aut, counted_stab = gl2_order(spec), borel_order(spec)
        if (counted_aut, counted_stab) != (aut_order, stabilizer):
            raise FormulaCheckError(
                f"p={p}: enumerated group orders {counted_aut}, {counted_stab} "
                f"differ from {aut_order}, {stabilizer}"
            )
    middle, rem = divmod(aut_order, stabilizer)
    if rem or middle != p + 1:
        raise FormulaCheckError(f"p={p}: middle orbit {aut_order}/{stabilizer} is not p+1")
    if total != 1 + middle + 1:
        raise FormulaCheckError(f"p={p}: count {total} differs from 1 + {middle} + 1")
    return ExampleBookkeeping(p=p, total=total, aut_order=aut_order, stabilizer_order=stabilizer, middle_orbit=middle)


__all__ = [
    "CoefficientTable",
    "ZetaFactors",
    "ExampleBookkeeping",
    "ModelCount",
    "RamificationInput",
    "WeightDecomposition",
    "decompose_e",
    "decompose_n",
    "coeff_a",
    "coeff_a_prime",
    "coefficient_table",
    "model_count",
    "zeta_factors",
    "moduli_dimension",
    "zeta_series",
    "zeta_series_from_counts",
    "gl2_order",
    "borel_order",
    "example_decomposition",
]
