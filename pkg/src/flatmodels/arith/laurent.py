"""Finite-support Laurent polynomials over GF(q).

A :class:`LaurentPoly` stores its nonzero terms sorted by exponent; the zero
polynomial has no terms. The twist :func:`lp_phi` sends u to u^p and leaves the
coefficients alone.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Union

from ..core.errors import SpecMismatchError, ValidationError
from .gf import FieldElement, FieldSpec, fe_add, fe_inv, fe_mul, fe_neg, fe_one


@functools.total_ordering
class Valuation:
    """u-adic valuation: an integer or the tagged value INFINITY."""

    __slots__ = ("_value",)

    def __init__(self, value: int | None) -> None:
        self._value = value

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def value(self) -> int:
        if self._value is None:
            raise ValueError("valuation of zero has no integer value")
        return self._value

    def _key(self) -> tuple[int, int]:
        return (1, 0) if self._value is None else (0, self._value)

    @staticmethod
    def _coerce(other: object) -> "Valuation | None":
        if isinstance(other, Valuation):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Valuation(other)
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._key() == o._key()

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._key() < o._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __add__(self, other: Union[int, "Valuation"]) -> "Valuation":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_infinite or o.is_infinite:
            return INFINITY
        return Valuation(self.value + o.value)

    __radd__ = __add__

    def __repr__(self) -> str:
        return "INFINITY" if self._value is None else f"Valuation({self._value})"

    def __str__(self) -> str:
        return "inf" if self._value is None else str(self._value)


INFINITY = Valuation(None)


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    terms: tuple[tuple[int, FieldElement], ...]
    spec: FieldSpec

    def as_dict(self) -> dict[int, FieldElement]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def exponents(self) -> list[int]:
        return [e for e, _ in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*u^{e}" for e, c in self.terms)


def _build(spec: FieldSpec, acc: Mapping[int, FieldElement]) -> LaurentPoly:
    return LaurentPoly(tuple(sorted((e, c) for e, c in acc.items() if not c.is_zero())), spec)


def _same_spec(f: LaurentPoly, g: LaurentPoly) -> FieldSpec:
    if f.spec != g.spec:
        raise SpecMismatchError(f"cannot combine polynomials over {f.spec} and {g.spec}", argument="spec")
    return f.spec


def lp_from_terms(spec: FieldSpec, terms: Mapping[int, FieldElement] | Iterable[tuple[int, FieldElement]]) -> LaurentPoly:
    items = terms.items() if isinstance(terms, Mapping) else terms
    acc: dict[int, FieldElement] = {}
    for e, c in items:
        if len(c.coeffs) != spec.k:
            raise ValidationError(f"coefficient {c} is not an element of {spec}", argument="terms")
        acc[e] = fe_add(acc[e], c, spec) if e in acc else c
    return _build(spec, acc)


def lp_zero(spec: FieldSpec) -> LaurentPoly:
    return LaurentPoly((), spec)


def lp_monomial(spec: FieldSpec, exponent: int, coeff: FieldElement | None = None) -> LaurentPoly:
    c = fe_one(spec) if coeff is None else coeff
    return lp_from_terms(spec, [(exponent, c)])


def lp_valuation(f: LaurentPoly) -> Valuation:
    if not f.terms:
        return INFINITY
    return Valuation(f.terms[0][0])


def lp_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    spec = _same_spec(f, g)
    acc = dict(f.terms)
    for e, c in g.terms:
        acc[e] = fe_add(acc[e], c, spec) if e in acc else c
    return _build(spec, acc)


def lp_neg(f: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(tuple((e, fe_neg(c, f.spec)) for e, c in f.terms), f.spec)


def lp_sub(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return lp_add(f, lp_neg(g))


def lp_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    spec = _same_spec(f, g)
    acc: dict[int, FieldElement] = {}
    for e1, c1 in f.terms:
        for e2, c2 in g.terms:
            prod = fe_mul(c1, c2, spec)
            e = e1 + e2
            acc[e] = fe_add(acc[e], prod, spec) if e in acc else prod
    return _build(spec, acc)


def lp_monomial_shift(f: LaurentPoly, m: int) -> LaurentPoly:
    """Multiply by u^m."""
    if m == 0:
        return f
    return LaurentPoly(tuple((e + m, c) for e, c in f.terms), f.spec)


def lp_phi(f: LaurentPoly, p: int) -> LaurentPoly:
    """u -> u^p with coefficients fixed."""
    if p != f.spec.p:
        raise ValidationError(f"twist exponent {p} differs from characteristic {f.spec.p}", argument="p")
    return LaurentPoly(tuple((p * e, c) for e, c in f.terms), f.spec)


def lp_truncate_mod(f: LaurentPoly, t: int) -> LaurentPoly:
    """Canonical representative of f modulo u^t F[[u]]: drop exponents >= t."""
    return LaurentPoly(tuple((e, c) for e, c in f.terms if e < t), f.spec)


def lp_is_monomial(f: LaurentPoly) -> bool:
    return len(f.terms) == 1


def lp_divide_by_monomial(f: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact quotient f / d where d is a unit multiple of a power of u."""
    if not lp_is_monomial(d):
        raise ValidationError(f"divisor {d} is not a monomial", argument="d")
    (exp, coeff), = d.terms
    inv = fe_inv(coeff, d.spec)
    scaled = LaurentPoly(tuple((e, fe_mul(c, inv, f.spec)) for e, c in f.terms), f.spec)
    return lp_monomial_shift(scaled, -exp)


@dataclass(frozen=True, slots=True)
class LaurentMatrix:
    """A 2x2 matrix ((a, b), (c, d)) over F((u))."""

    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    def entries(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.a, self.b, self.c, self.d)

    def det(self) -> LaurentPoly:
        return lp_sub(lp_mul(self.a, self.d), lp_mul(self.b, self.c))

    def adjugate(self) -> "LaurentMatrix":
        return LaurentMatrix(self.d, lp_neg(self.b), lp_neg(self.c), self.a)

    def map_entries(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "LaurentMatrix":
        return LaurentMatrix(fn(self.a), fn(self.b), fn(self.c), fn(self.d))

    def min_valuation(self) -> Valuation:
        return min(lp_valuation(x) for x in self.entries())

    def is_integral(self) -> bool:
        """All entries lie in F[[u]]."""
        return self.min_valuation() >= 0


__all__ = [
    "Valuation",
    "INFINITY",
    "LaurentPoly",
    "LaurentMatrix",
    "lp_from_terms",
    "lp_zero",
    "lp_monomial",
    "lp_valuation",
    "lp_add",
    "lp_neg",
    "lp_sub",
    "lp_mul",
    "lp_monomial_shift",
    "lp_phi",
    "lp_truncate_mod",
    "lp_is_monomial",
    "lp_divide_by_monomial",
]
