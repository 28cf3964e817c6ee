"""Exact arithmetic in GF(p^k) for odd primes p.

Elements are coordinate vectors in the power basis of a fixed monic irreducible
modulus, constant coordinate first. The modulus chosen by :func:`field_make` is the
lexicographically smallest monic irreducible of degree k (coefficients compared from
the constant term upward), so element orders are reproducible across runs.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..core.errors import FieldDomainError, ValidationError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# Polynomials over GF(p) as coefficient tuples, constant term first, no trailing zeros.

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    r = [c % p for c in a]
    _trim(r)
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, c in enumerate(m):
            r[shift + i] = (r[shift + i] - lead * c) % p
        _trim(r)
    return r


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(poly) - 1
    if k < 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(poly, (*low, 1), p):
                return False
    return True


@dataclass(frozen=True, slots=True)
class FieldSpec:
    """The finite field GF(p^k) presented as GF(p)[x]/(modulus)."""

    p: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p < 3:
            raise ValidationError(f"characteristic must be an odd prime, got {self.p}", argument="p")
        if self.k < 1:
            raise ValidationError(f"extension degree must be >= 1, got {self.k}", argument="k")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValidationError("modulus must be monic of degree k", argument="modulus")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise ValidationError("modulus coefficients must lie in [0, p-1]", argument="modulus")
        if not _is_irreducible(self.modulus, self.p):
            raise ValidationError(f"modulus {list(self.modulus)} is reducible over GF({self.p})", argument="modulus")

    @property
    def q(self) -> int:
        return self.p**self.k

    def __str__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


@dataclass(frozen=True, slots=True)
class FieldElement:
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        if len(self.coeffs) == 1:
            return str(self.coeffs[0])
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


@functools.lru_cache(maxsize=None)
def field_make(p: int, k: int) -> FieldSpec:
    """Build GF(p^k) with the smallest-lex monic irreducible modulus."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValidationError(f"must be prime, got {p!r}", argument="p")
    if p == 2:
        raise ValidationError("characteristic 2 is not supported", argument="p")
    if not isinstance(k, int) or k < 1:
        raise ValidationError(f"must be a positive integer, got {k!r}", argument="k")
    for low in itertools.product(range(p), repeat=k):
        candidate = (*low, 1)
        if _is_irreducible(candidate, p):
            return FieldSpec(p=p, k=k, modulus=candidate)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def element(spec: FieldSpec, coeffs: Iterable[int] | int) -> FieldElement:
    """Validated constructor; an int is read as the base-p enumeration index."""
    if isinstance(coeffs, int):
        if not 0 <= coeffs < spec.q:
            raise ValidationError(f"index {coeffs} outside [0, {spec.q - 1}]", argument="coeffs")
        digits = []
        n = coeffs
        for _ in range(spec.k):
            n, d = divmod(n, spec.p)
            digits.append(d)
        return FieldElement(tuple(digits))
    values = tuple(coeffs)
    if len(values) != spec.k or any(not 0 <= c < spec.p for c in values):
        raise ValidationError(f"expected {spec.k} residues mod {spec.p}, got {values}", argument="coeffs")
    return FieldElement(values)


def fe_zero(spec: FieldSpec) -> FieldElement:
    return FieldElement((0,) * spec.k)


def fe_one(spec: FieldSpec) -> FieldElement:
    return FieldElement((1,) + (0,) * (spec.k - 1))


def fe_add(a: FieldElement, b: FieldElement, spec: FieldSpec) -> FieldElement:
    p = spec.p
    return FieldElement(tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))


def fe_neg(a: FieldElement, spec: FieldSpec) -> FieldElement:
    p = spec.p
    return FieldElement(tuple((-x) % p for x in a.coeffs))


def fe_sub(a: FieldElement, b: FieldElement, spec: FieldSpec) -> FieldElement:
    p = spec.p
    return FieldElement(tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))


def fe_mul(a: FieldElement, b: FieldElement, spec: FieldSpec) -> FieldElement:
    p, k = spec.p, spec.k
    if k == 1:
        return FieldElement(((a.coeffs[0] * b.coeffs[0]) % p,))
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                prod[i + j] += x * y
    reduced = _poly_mod(prod, spec.modulus, p)
    return FieldElement(tuple(reduced) + (0,) * (k - len(reduced)))


def fe_pow(a: FieldElement, n: int, spec: FieldSpec) -> FieldElement:
    result = fe_one(spec)
    base = a
    while n > 0:
        if n & 1:
            result = fe_mul(result, base, spec)
        base = fe_mul(base, base, spec)
        n >>= 1
    return result


def fe_inv(a: FieldElement, spec: FieldSpec) -> FieldElement:
    if a.is_zero():
        raise FieldDomainError(f"inverse of zero in {spec}")
    if spec.k == 1:
        return FieldElement((pow(a.coeffs[0], spec.p - 2, spec.p),))
    # a^(q-2) = a^-1 in the multiplicative group of order q-1
    return fe_pow(a, spec.q - 2, spec)


@functools.lru_cache(maxsize=None)
def enumerate_elements(spec: FieldSpec) -> tuple[FieldElement, ...]:
    """All q elements as a base-p counter, constant coordinate fastest; zero first."""
    return tuple(
        FieldElement(tuple(reversed(digits)))
        for digits in itertools.product(range(spec.p), repeat=spec.k)
    )


__all__ = [
    "FieldSpec",
    "FieldElement",
    "is_prime",
    "field_make",
    "element",
    "fe_zero",
    "fe_one",
    "fe_add",
    "fe_neg",
    "fe_sub",
    "fe_mul",
    "fe_pow",
    "fe_inv",
    "enumerate_elements",
]
