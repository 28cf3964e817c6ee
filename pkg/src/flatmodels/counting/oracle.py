"""Brute-force point counts of the moduli space of finite flat models.

A point is a lattice (u^s v; 0 u^t)·M_0 with v canonical modulo u^t. Writing the
same lattice as (1 w; 0 1)·M_{s,t} gives w = v·u^(-t); the Kisin condition is
tested on w twice, once as a valuation inequality and once as integrality of the
Frobenius matrix and of u^e times its inverse. The two tests must agree on every
candidate.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from ..arith.gf import FieldElement, FieldSpec, enumerate_elements
from ..arith.laurent import (
    LaurentMatrix,
    LaurentPoly,
    lp_divide_by_monomial,
    lp_monomial,
    lp_monomial_shift,
    lp_phi,
    lp_sub,
    lp_valuation,
    lp_zero,
)
from ..core.errors import CrossCheckError, ValidationError
from ..observability import metrics
from ..observability.logging import get_logger
from .census import r_st, valuation_threshold
from .inputs import ModelCount, RamificationInput, cell_range

logger = get_logger("flatmodels.oracle")


@dataclass(frozen=True, slots=True)
class LatticePoint:
    s: int
    t: int
    v: LaurentPoly

    @property
    def unipotent(self) -> LaurentPoly:
        """The parameter w with (u^s v; 0 u^t) = (1 w; 0 1)(u^s 0; 0 u^t)."""
        return lp_monomial_shift(self.v, -self.t)

    def __str__(self) -> str:
        return f"(s={self.s}, t={self.t}, v={self.v})"


@dataclass(frozen=True, slots=True)
class CrossCheckFailure:
    s: int
    t: int
    v: str
    valuation_condition: bool
    matrix_condition: bool

    def as_dict(self) -> dict[str, object]:
        return {
            "s": self.s,
            "t": self.t,
            "v": self.v,
            "valuation_condition": self.valuation_condition,
            "matrix_condition": self.matrix_condition,
        }


@dataclass
class CellResult:
    s: int
    t: int
    points: list[LatticePoint]
    candidates: int
    pruned: int
    failures: list[CrossCheckFailure] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.points)


@dataclass
class OracleReport:
    p: int
    e: int
    q: int
    cells: dict[tuple[int, int], int]
    total: ModelCount
    cross_check_failures: list[CrossCheckFailure] = field(default_factory=list)
    candidates: int = 0

    def to_payload(self) -> dict[str, object]:
        return {
            "p": self.p,
            "e": self.e,
            "q": self.q,
            "cells": [{"s": s, "t": t, "count": n} for (s, t), n in sorted(self.cells.items())],
            "total": str(self.total.value),
            "cross_check_failures": [f.as_dict() for f in self.cross_check_failures],
        }


def _twisted_difference(inp: RamificationInput, s: int, t: int, w: LaurentPoly) -> LaurentPoly:
    """w u^((p-1)s) - phi(w) u^((p-1)t)."""
    p = inp.p
    return lp_sub(lp_monomial_shift(w, (p - 1) * s), lp_monomial_shift(lp_phi(w, p), (p - 1) * t))


def valuation_condition(inp: RamificationInput, s: int, t: int, v: LaurentPoly) -> bool:
    """v_u(v u^((p-1)s) - phi(v) u^((p-1)t)) >= max{0, (p-1)(s+t) - e} for the unipotent parameter v."""
    cell_range(inp, s, t)
    return lp_valuation(_twisted_difference(inp, s, t, v)) >= valuation_threshold(inp, s, t)


def frobenius_matrix(inp: RamificationInput, s: int, t: int, v: LaurentPoly) -> LaurentMatrix:
    p = inp.p
    spec = v.spec
    diag_s = lp_monomial(spec, (p - 1) * s)
    diag_t = lp_monomial(spec, (p - 1) * t)
    upper = lp_sub(lp_monomial_shift(lp_phi(v, p), (p - 1) * t), lp_monomial_shift(v, (p - 1) * s))
    return LaurentMatrix(diag_s, upper, lp_zero(spec), diag_t)


def matrix_condition(inp: RamificationInput, s: int, t: int, v: LaurentPoly) -> bool:
    """u^e M ⊂ (1⊗phi)(phi^*M) ⊂ M, read off the Frobenius matrix A of the lattice."""
    cell_range(inp, s, t)
    a = frobenius_matrix(inp, s, t, v)
    if not a.is_integral():
        return False
    det = a.det()
    scaled = a.adjugate().map_entries(lambda x: lp_monomial_shift(lp_divide_by_monomial(x, det), inp.e))
    return scaled.is_integral()


def same_point(x: LatticePoint, y: LatticePoint) -> bool:
    """Two Iwasawa triples give the same lattice iff s, t agree and v1 - v2 lies in u^t F[[u]]."""
    if (x.s, x.t) != (y.s, y.t):
        return False
    return lp_valuation(lp_sub(x.v, y.v)) >= x.t


def _window(inp: RamificationInput, t: int) -> range:
    """Exponents of the unipotent parameter: v in [-e, t-1] shifted by -t."""
    return range(-inp.e - t, 0)


def _poly(spec: FieldSpec, exponents: range, coeffs: tuple[FieldElement, ...]) -> LaurentPoly:
    return LaurentPoly(tuple((x, c) for x, c in zip(exponents, coeffs) if not c.is_zero()), spec)


def _live_lowest_exponents(inp: RamificationInput, q: int, s: int, t: int) -> tuple[list[int], int]:
    """Lowest exponents worth enumerating, and how many candidates the rest hold.

    A w whose lowest exponent m is not s - t has no cancellation, so the twisted
    difference has valuation min(m + (p-1)s, pm + (p-1)t); below the threshold
    every w with that lowest exponent fails.
    """
    p = inp.p
    threshold = valuation_threshold(inp, s, t)
    live: list[int] = []
    pruned = 0
    for low in _window(inp, t):
        if low != s - t and min(low + (p - 1) * s, p * low + (p - 1) * t) < threshold:
            pruned += (q - 1) * q ** (-1 - low)
        else:
            live.append(low)
    return live, pruned


def _candidates(spec: FieldSpec, window: range, lows: list[int] | None) -> Iterator[LaurentPoly]:
    elems = enumerate_elements(spec)
    if lows is None:
        for coeffs in itertools.product(elems, repeat=len(window)):
            yield _poly(spec, window, coeffs)
        return
    yield lp_zero(spec)
    for low in lows:
        tail = range(low + 1, 0)
        for lead in elems[1:]:
            for rest in itertools.product(elems, repeat=len(tail)):
                yield LaurentPoly(((low, lead),) + _poly(spec, tail, rest).terms, spec)


def scan_cell(
    inp: RamificationInput,
    spec: FieldSpec,
    s: int,
    t: int,
    *,
    prune: bool = False,
    strict: bool = True,
) -> CellResult:
    """Test every candidate of cell (s, t) with both conditions.

    A disagreement raises :class:`CrossCheckError` when ``strict`` and is
    recorded on the result otherwise.
    """
    cell_range(inp, s, t)
    if spec.p != inp.p:
        raise ValidationError(f"field characteristic {spec.p} differs from p={inp.p}", argument="spec")

    window = _window(inp, t)
    lows: list[int] | None = None
    pruned = 0
    if prune:
        lows, pruned = _live_lowest_exponents(inp, spec.q, s, t)

    points: list[LatticePoint] = []
    failures: list[CrossCheckFailure] = []
    examined = 0
    for w in _candidates(spec, window, lows):
        examined += 1
        by_valuation = valuation_condition(inp, s, t, w)
        by_matrix = matrix_condition(inp, s, t, w)
        if by_valuation != by_matrix:
            if strict:
                raise CrossCheckError("valuation and matrix conditions disagree", s=s, t=t, v=str(w))
            failures.append(CrossCheckFailure(s, t, str(w), by_valuation, by_matrix))
            continue
        if by_valuation:
            points.append(LatticePoint(s=s, t=t, v=lp_monomial_shift(w, t)))

    metrics.inc("oracle.candidates", examined)
    metrics.inc("oracle.accepted", len(points))
    metrics.inc("oracle.pruned", pruned)
    logger.debug("cell enumerated", s=s, t=t, q=spec.q, candidates=examined, pruned=pruned, points=len(points))
    return CellResult(s=s, t=t, points=points, candidates=examined, pruned=pruned, failures=failures)


def enumerate_cell(
    inp: RamificationInput, spec: FieldSpec, s: int, t: int, *, prune: bool = False
) -> list[LatticePoint]:
    """All points of cell (s, t) over ``spec``, each v its own canonical representative."""
    return scan_cell(inp, spec, s, t, prune=prune, strict=True).points


def candidate_count(inp: RamificationInput, q: int) -> int:
    """Unpruned candidates over all cells: sum over t of (e_0+1) q^(t+e)."""
    return sum((inp.e_0 + 1) * q ** (t + inp.e) for t in range(inp.e_0 + 1))


def _cell_job(args: tuple[RamificationInput, FieldSpec, int, int, bool]) -> CellResult:
    inp, spec, s, t, prune = args
    return scan_cell(inp, spec, s, t, prune=prune, strict=False)


def oracle_count(
    inp: RamificationInput,
    spec: FieldSpec,
    *,
    prune: bool = False,
    workers: int = 1,
    raise_on_failure: bool = True,
) -> OracleReport:
    """Count points over ``spec`` cell by cell; cells are disjoint, so the total is their sum."""
    if spec.p != inp.p:
        raise ValidationError(f"field characteristic {spec.p} differs from p={inp.p}", argument="spec")
    jobs = [(inp, spec, s, t, prune) for s in range(inp.e_0 + 1) for t in range(inp.e_0 + 1)]

    with logger.operation("oracle_count", p=inp.p, e=inp.e, q=spec.q, prune=prune, workers=workers):
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_cell_job, jobs))
            # worker-side counters stay in the workers
            for res in results:
                metrics.merge({"oracle.candidates": res.candidates, "oracle.accepted": res.count, "oracle.pruned": res.pruned})
        else:
            results = [_cell_job(job) for job in jobs]
    metrics.inc("oracle.cells", len(results))

    failures = [f for res in results for f in res.failures]
    report = OracleReport(
        p=inp.p,
        e=inp.e,
        q=spec.q,
        cells={(res.s, res.t): res.count for res in results},
        total=ModelCount(sum(res.count for res in results)),
        cross_check_failures=failures,
        candidates=sum(res.candidates for res in results),
    )
    if failures and raise_on_failure:
        first = failures[0]
        raise CrossCheckError(
            f"{len(failures)} candidates where valuation and matrix conditions disagree",
            s=first.s,
            t=first.t,
            v=first.v,
        )
    return report


@dataclass(frozen=True, slots=True)
class CancellationProfile:
    s: int
    t: int
    r: int
    slot: int
    deep_points: int
    violations: tuple[str, ...]


def cancellation_profile(inp: RamificationInput, spec: FieldSpec, s: int, t: int) -> CancellationProfile:
    """Check that every valid w with pole order above r_{s,t} is alpha u^(s-t) + w_+,
    with w_+ of pole order at most r_{s,t}."""
    r = r_st(inp, s, t)
    slot = s - t
    deep = 0
    violations: list[str] = []
    for point in enumerate_cell(inp, spec, s, t):
        w = point.unipotent
        if w.is_zero() or -lp_valuation(w).value <= r:
            continue
        deep += 1
        low = w.terms[0][0]
        rest = LaurentPoly(w.terms[1:], spec)
        if low != slot or (not rest.is_zero() and -lp_valuation(rest).value > r):
            violations.append(str(w))
    return CancellationProfile(s=s, t=t, r=r, slot=slot, deep_points=deep, violations=tuple(violations))


__all__ = [
    "LatticePoint",
    "CrossCheckFailure",
    "CellResult",
    "OracleReport",
    "CancellationProfile",
    "valuation_condition",
    "frobenius_matrix",
    "matrix_condition",
    "same_point",
    "scan_cell",
    "enumerate_cell",
    "candidate_count",
    "oracle_count",
    "cancellation_profile",
]
