"""Property suite behind ``flatmodels verify``.

Each check raises :class:`InvariantError` on the first counterexample and
otherwise returns a short summary of what it covered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from .arith.gf import field_make
from .config.models import OracleRun, SuiteSettings
from .core.errors import FlatModelsError, FormulaCheckError, InvariantError
from .counting.census import (
    census,
    census_count,
    closed_form_partition_sizes,
    h_histogram,
    max_h,
    partition_table,
)
from .counting.formula import (
    coefficient_table,
    example_decomposition,
    model_count,
    moduli_dimension,
    zeta_factors,
    zeta_series,
    zeta_series_from_counts,
)
from .counting.inputs import RamificationInput, decompose_e, decompose_n
from .counting.oracle import OracleReport, cancellation_profile, oracle_count
from .observability import metrics
from .observability.logging import get_logger

logger = get_logger("flatmodels.verify")


@dataclass(frozen=True, slots=True)
class PropertyResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.detail}" if self.detail else f"{status} {self.name}"


class _Runner:
    def __init__(self, suite: SuiteSettings, workers: int) -> None:
        self.suite = suite
        self.workers = workers
        self._reports: Dict[Tuple[int, int, int, bool], OracleReport] = {}

    def _sweep(self) -> List[RamificationInput]:
        return [decompose_e(p, e) for p in self.suite.sweep_primes for e in range(1, self.suite.sweep_e_max + 1)]

    def _report(self, p: int, e: int, k: int, prune: bool) -> OracleReport:
        key = (p, e, k, prune)
        if key not in self._reports:
            self._reports[key] = oracle_count(
                decompose_e(p, e), field_make(p, k), prune=prune, workers=self.workers, raise_on_failure=False
            )
        return self._reports[key]

    @staticmethod
    def _runs(runs: List[OracleRun]) -> List[Tuple[OracleRun, int]]:
        return [(run, e) for run in runs for e in range(run.e_min, run.e_max + 1)]

    def example_reproduction(self) -> str:
        for p in self.suite.example_primes:
            got = model_count(decompose_e(p, p - 1), p).value
            if got != p + 3:
                raise FormulaCheckError(f"p={p}: count {got} != p+3")
        return f"{len(self.suite.example_primes)} primes"

    def low_ramification_singleton(self) -> str:
        checked = 0
        for p in self.suite.singleton_primes:
            for e in range(1, p - 1):
                inp = decompose_e(p, e)
                for q in (p, p * p):
                    got = model_count(inp, q).value
                    if got != 1:
                        raise FormulaCheckError(f"{inp}, q={q}: count {got} != 1")
                    checked += 1
        return f"{checked} (p, e, q) triples"

    def theorem_identity(self) -> str:
        sweep = self._sweep()
        for inp in sweep:
            c = coefficient_table(inp).c
            hist = tuple(h_histogram(inp))
            if c != hist:
                raise FormulaCheckError(f"{inp}: coefficients {c} != cell histogram {hist}")
            for q in (inp.p, inp.p**2):
                if census_count(inp, q) != model_count(inp, q):
                    raise FormulaCheckError(f"{inp}, q={q}: census and formula totals differ")
        return f"{len(sweep)} (p, e) pairs"

    def partition_identity(self) -> str:
        sweep = self._sweep()
        for inp in sweep:
            table = coefficient_table(inp)
            for sizes in partition_table(inp):
                n = sizes.n
                if sizes.unprimed != table.a[n] or sizes.primed != table.a_prime[n]:
                    raise FormulaCheckError(
                        f"{inp}, n={n}: regions {sizes} vs a_n={table.a[n]}, a_n'={table.a_prime[n]}"
                    )
                closed = closed_form_partition_sizes(inp, n)
                if closed != sizes:
                    raise FormulaCheckError(f"{inp}, n={n}: closed form {closed} != census {sizes}")
                w = decompose_n(inp, n)
                if (w.n_1 != 1 and sizes.s_n2) or (w.n_1p != 1 and sizes.s_n2p):
                    raise FormulaCheckError(f"{inp}, n={n}: a below-threshold region is nonempty: {sizes}")
        return f"{len(sweep)} (p, e) pairs"

    def dimension_remark(self) -> str:
        sweep = self._sweep()
        for inp in sweep:
            if moduli_dimension(inp) != max_h(inp):
                raise FormulaCheckError(f"{inp}: dimension {moduli_dimension(inp)} != max h {max_h(inp)}")
        return f"{len(sweep)} (p, e) pairs"

    def aut_bookkeeping(self) -> str:
        for p in self.suite.aut_primes:
            example_decomposition(p)
        return f"{len(self.suite.aut_primes)} primes"

    def zeta_consistency(self) -> str:
        terms = self.suite.zeta_terms
        checked = 0
        for inp in self._sweep():
            factors = zeta_factors(inp, inp.p)
            counts = [factors.point_count(m) for m in range(1, terms)]
            if zeta_series(factors, terms) != zeta_series_from_counts(counts):
                raise FormulaCheckError(f"{inp}: product and exponential forms of Z(T) differ")
            checked += 1
        return f"{checked} zeta functions to T^{terms - 1}"

    def oracle_agreement(self) -> str:
        runs = self._runs(self.suite.oracle_runs)
        for run, e in runs:
            inp = decompose_e(run.p, e)
            q = run.p**run.k
            report = self._report(run.p, e, run.k, run.prune)
            expected = model_count(inp, q)
            if report.total != expected or census_count(inp, q) != expected:
                raise FormulaCheckError(f"{inp}, q={q}: oracle {report.total} vs formula {expected}")
            for cell in census(inp):
                got = report.cells[(cell.s, cell.t)]
                if got != q**cell.h:
                    raise FormulaCheckError(f"{inp}, q={q}, cell ({cell.s}, {cell.t}): {got} != q^{cell.h}")
        return f"{len(runs)} (p, e, q) runs"

    def condition_equivalence(self) -> str:
        examined = 0
        for run, e in self._runs(self.suite.oracle_runs):
            report = self._report(run.p, e, run.k, run.prune)
            if report.cross_check_failures:
                first = report.cross_check_failures[0]
                raise InvariantError(
                    f"p={run.p}, e={e}: {len(report.cross_check_failures)} mismatches, first at "
                    f"(s={first.s}, t={first.t}, v={first.v})"
                )
            examined += report.candidates
        return f"{examined} candidates, 0 mismatches"

    def extension_check(self) -> str:
        checked = 0
        for run in self.suite.extension_runs:
            for e in range(1, run.e_max + 1):
                inp = decompose_e(run.p, e)
                predicted = zeta_factors(inp, run.p).point_count(run.m)
                report = self._report(run.p, e, run.m, run.prune)
                if report.total.value != predicted:
                    raise FormulaCheckError(
                        f"{inp}: oracle over GF({run.p}^{run.m}) found {report.total}, predicted {predicted}"
                    )
                checked += 1
        return f"{checked} runs"

    def pruning_validation(self) -> str:
        runs = self._runs(self.suite.pruning_runs)
        for run, e in runs:
            full = self._report(run.p, e, run.k, False)
            pruned = self._report(run.p, e, run.k, True)
            if full.cells != pruned.cells:
                raise InvariantError(f"p={run.p}, e={e}: pruned cells {pruned.cells} != {full.cells}")
        return f"{len(runs)} runs"

    def cancellation_structure(self) -> str:
        deep = 0
        runs = self._runs(self.suite.cancellation_runs)
        for run, e in runs:
            inp = decompose_e(run.p, e)
            spec = field_make(run.p, run.k)
            for s in range(inp.e_0 + 1):
                for t in range(inp.e_0 + 1):
                    profile = cancellation_profile(inp, spec, s, t)
                    if profile.violations:
                        raise InvariantError(
                            f"{inp}, cell ({s}, {t}): deep points without the u^{profile.slot} term: "
                            f"{list(profile.violations)[:3]}"
                        )
                    deep += profile.deep_points
        return f"{len(runs)} runs, {deep} points with a cancelling lowest term"


CHECKS: List[Tuple[str, Callable[[_Runner], str]]] = [
    ("example_reproduction", _Runner.example_reproduction),
    ("low_ramification_singleton", _Runner.low_ramification_singleton),
    ("theorem_identity", _Runner.theorem_identity),
    ("partition_identity", _Runner.partition_identity),
    ("dimension_remark", _Runner.dimension_remark),
    ("aut_bookkeeping", _Runner.aut_bookkeeping),
    ("zeta_consistency", _Runner.zeta_consistency),
    ("pruning_validation", _Runner.pruning_validation),
    ("oracle_agreement", _Runner.oracle_agreement),
    ("condition_equivalence", _Runner.condition_equivalence),
    ("extension_check", _Runner.extension_check),
    ("cancellation_structure", _Runner.cancellation_structure),
]


def run_suite(suite: SuiteSettings, *, workers: int = 1) -> List[PropertyResult]:
    runner = _Runner(suite, workers)
    results: List[PropertyResult] = []
    for name, check in CHECKS:
        try:
            with logger.operation(f"verify.{name}"):
                detail = check(runner)
        except FlatModelsError as exc:
            metrics.inc("verify.fail")
            results.append(PropertyResult(name=name, passed=False, detail=exc.message))
        else:
            metrics.inc("verify.pass")
            results.append(PropertyResult(name=name, passed=True, detail=detail))
    return results


__all__ = ["PropertyResult", "CHECKS", "run_suite"]
