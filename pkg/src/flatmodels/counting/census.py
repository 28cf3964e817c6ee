"""Per-cell census of the moduli space.

Every point lies in exactly one cell (s, t) with 0 <= s, t <= e_0, and a cell
holds q^h points. The four cases split on whether (p-1)(s+t) exceeds e and on
whether ps - t reaches the valuation threshold max{0, (p-1)(s+t) - e}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..core.errors import CensusInconsistencyError, ValidationError
from ..observability import metrics
from .inputs import ModelCount, RamificationInput, cell_range, decompose_n, prime_power_exponent


class CaseTag(str, Enum):
    LOW_GE = "LOW_GE"
    LOW_LT = "LOW_LT"
    HIGH_GE = "HIGH_GE"
    HIGH_LT = "HIGH_LT"

    @property
    def is_low(self) -> bool:
        return self in (CaseTag.LOW_GE, CaseTag.LOW_LT)

    @property
    def reaches_threshold(self) -> bool:
        return self in (CaseTag.LOW_GE, CaseTag.HIGH_GE)


@dataclass(frozen=True, slots=True)
class CellCount:
    s: int
    t: int
    case_tag: CaseTag
    r: int
    h: int

    def as_row(self) -> list[object]:
        return [self.s, self.t, self.case_tag.value, self.r, self.h]


@dataclass(frozen=True, slots=True)
class PartitionSizes:
    n: int
    s_n1: int
    s_n2: int
    s_n1p: int
    s_n2p: int

    @property
    def unprimed(self) -> int:
        return self.s_n1 + self.s_n2

    @property
    def primed(self) -> int:
        return self.s_n1p + self.s_n2p

    @property
    def total(self) -> int:
        return self.unprimed + self.primed


def valuation_threshold(inp: RamificationInput, s: int, t: int) -> int:
    return max(0, (inp.p - 1) * (s + t) - inp.e)


def r_st(inp: RamificationInput, s: int, t: int) -> int:
    cell_range(inp, s, t)
    p, e = inp.p, inp.e
    return min(
        (p - 1) * s,
        (e - (p - 1) * s) // p,
        e - (p - 1) * t,
        ((p - 1) * t) // p,
    )


def h_st(inp: RamificationInput, s: int, t: int) -> CellCount:
    r = r_st(inp, s, t)
    p, e = inp.p, inp.e

    low = (p - 1) * (s + t) <= e
    if low != (s + t <= inp.e_0):
        raise CensusInconsistencyError(
            f"region split disagrees at ({s}, {t}) for {inp}: threshold form says low={low}"
        )
    reaches = p * s - t >= valuation_threshold(inp, s, t)

    if low and reaches:
        tag, h = CaseTag.LOW_GE, ((p - 1) * t) // p
    elif low:
        tag, h = CaseTag.LOW_LT, (p - 1) * s + 1
    elif reaches:
        tag, h = CaseTag.HIGH_GE, (e - (p - 1) * s) // p
    else:
        tag, h = CaseTag.HIGH_LT, e - (p - 1) * t + 1

    expected = r if reaches else r + 1
    if h != expected:
        raise CensusInconsistencyError(
            f"cell ({s}, {t}) of {inp}: case {tag.value} gives h={h} but r={r} implies {expected}"
        )
    return CellCount(s=s, t=t, case_tag=tag, r=r, h=h)


def census(inp: RamificationInput) -> list[CellCount]:
    """All (e_0+1)^2 cells, s-major."""
    cells = [h_st(inp, s, t) for s in range(inp.e_0 + 1) for t in range(inp.e_0 + 1)]
    metrics.inc("census.cells", len(cells))
    return cells


def census_count(inp: RamificationInput, q: int) -> ModelCount:
    prime_power_exponent(q, inp.p)
    return ModelCount(sum(q**cell.h for cell in census(inp)))


def h_histogram(inp: RamificationInput, length: int | None = None) -> list[int]:
    """Number of cells with h = n for n = 0..length-1 (default e+1)."""
    size = inp.e + 1 if length is None else length
    hist = [0] * size
    for cell in census(inp):
        if cell.h >= size:
            raise CensusInconsistencyError(f"cell ({cell.s}, {cell.t}) has h={cell.h} beyond {size - 1}")
        hist[cell.h] += 1
    return hist


def max_h(inp: RamificationInput) -> int:
    return max(cell.h for cell in census(inp))


def partition_table(inp: RamificationInput, length: int | None = None) -> list[PartitionSizes]:
    """Region sizes for n = 0..length-1 (default e+1) from a single census pass."""
    size = inp.e + 1 if length is None else length
    counts = [{tag: 0 for tag in CaseTag} for _ in range(size)]
    for cell in census(inp):
        if cell.h < size:
            counts[cell.h][cell.case_tag] += 1
    return [
        PartitionSizes(
            n=n,
            s_n1=c[CaseTag.LOW_GE],
            s_n2=c[CaseTag.LOW_LT],
            s_n1p=c[CaseTag.HIGH_GE],
            s_n2p=c[CaseTag.HIGH_LT],
        )
        for n, c in enumerate(counts)
    ]


def partition_sizes(inp: RamificationInput, n: int) -> PartitionSizes:
    if n < 0:
        raise ValidationError(f"must be >= 0, got {n}", argument="n")
    return partition_table(inp, n + 1)[n]


def closed_form_partition_sizes(inp: RamificationInput, n: int) -> PartitionSizes:
    """Region sizes from the interval descriptions of each region, without a census."""
    p, e_0, e_1 = inp.p, inp.e_0, inp.e_1
    w = decompose_n(inp, n)

    base = e_0 - (p + 1) * w.n_0
    if w.n_1 == 0:
        s_n1 = max(base + 1, 0) + max(base - 1, 0)
    else:
        s_n1 = max(base - w.n_1 - 1, 0)
    s_n2 = max(base, 0) if w.n_1 == 1 else 0

    base_p = e_0 - e_1 - (p + 1) * w.n_0p
    if w.n_1p == 0:
        s_n1p = max(base_p - 2, 0) + max(base_p, 0)
    else:
        s_n1p = max(base_p - w.n_1p - 2, 0)
    exceptional = n == 0 and e_1 == p - 2
    s_n2p = max(base_p - 1, 0) if w.n_1p == 1 and not exceptional else 0

    return PartitionSizes(n=n, s_n1=s_n1, s_n2=s_n2, s_n1p=s_n1p, s_n2p=s_n2p)


__all__ = [
    "CaseTag",
    "CellCount",
    "PartitionSizes",
    "valuation_threshold",
    "r_st",
    "h_st",
    "census",
    "census_count",
    "h_histogram",
    "max_h",
    "partition_table",
    "partition_sizes",
    "closed_form_partition_sizes",
]
