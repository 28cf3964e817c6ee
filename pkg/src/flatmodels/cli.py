from __future__ import annotations

import importlib
from typing import Any, List, Optional, Sequence

import typer
from pydantic import ValidationError as PydanticValidationError
from typer import Option

from .arith.gf import field_make
from .config.loader import load_config
from .config.models import FlatModelsConfig, RunConfig
from .core.errors import CapExceededError, FlatModelsError, ValidationError, get_exit_code
from .counting.census import census, census_count
from .counting.formula import model_count, moduli_dimension, zeta_factors, zeta_series
from .counting.inputs import RamificationInput, decompose_e, prime_power_exponent
from .counting.oracle import oracle_count
from .exporters.render import render_json, render_plain, render_table, write_output
from .observability import metrics
from .observability.logging import get_logger, set_verbose
from .verify import run_suite

app = typer.Typer(
    name="flatmodels",
    help="Count finite flat models of the rank-two constant group scheme over ramified extensions of Q_p",
    no_args_is_help=True,
    add_completion=False,
)

logger = get_logger("flatmodels.cli")


def _usage_exception_types() -> tuple[tuple[type[BaseException], ...], tuple[type[BaseException], ...]]:
    """(usage errors, aborts) from whichever click implementations are importable.

    Recent typer releases vendor click as ``typer._click``; older ones raise the
    exceptions of the standalone ``click`` package.
    """
    usage: list[type[BaseException]] = []
    aborts: list[type[BaseException]] = []
    for module_name in ("typer._click.exceptions", "click.exceptions"):
        try:
            module = importlib.import_module(module_name)
        except ImportError:
            continue
        usage.append(module.ClickException)
        aborts.append(module.Abort)
    return tuple(usage), tuple(aborts)


_USAGE_ERRORS, _ABORTS = _usage_exception_types()

TABLE_HEADER = ("p", "e", "q", "count", "dimension")
CENSUS_HEADER = ("s", "t", "case", "r", "h")


def _resolve_q(config: RunConfig, p: int, k: int) -> int:
    if config.q is not None:
        prime_power_exponent(config.q, p)
        return config.q
    return p**k


def _single(config: RunConfig) -> tuple[RamificationInput, int]:
    assert config.e is not None
    inp = decompose_e(config.p[0], config.e)
    return inp, _resolve_q(config, inp.p, config.k[0])


def _check_oracle_caps(config: RunConfig, settings: FlatModelsConfig, inp: RamificationInput, q: int) -> None:
    if config.allow_large:
        return
    caps = settings.oracle
    if inp.e > caps.max_e:
        raise CapExceededError(
            f"oracle refuses e={inp.e} > {caps.max_e}; pass --allow-large to override", argument="e"
        )
    size = q ** (inp.e + inp.e_0 + 1)
    if size > caps.max_candidates:
        raise CapExceededError(
            f"oracle search space q^(e+e_0+1) = {size} exceeds {caps.max_candidates}; "
            "pass --allow-large to override",
            argument="q",
        )


def _run_count(config: RunConfig) -> str:
    inp, q = _single(config)
    count = model_count(inp, q)
    if config.format == "json":
        return render_json({"p": inp.p, "e": inp.e, "q": q, "count": str(count)})
    if config.format == "csv":
        return render_table("csv", ("p", "e", "q", "count"), [(inp.p, inp.e, q, count)])
    return render_plain([count])


def _run_table(config: RunConfig) -> str:
    lo, hi = config.e_range()
    if config.q is not None and len(config.p) != 1:
        raise ValidationError("--q needs exactly one --p", argument="q")
    rows = []
    for p in sorted(set(config.p)):
        for e in range(lo, hi + 1):
            inp = decompose_e(p, e)
            dim = moduli_dimension(inp)
            for k in sorted(set(config.k)):
                q = _resolve_q(config, p, k)
                rows.append((p, e, q, model_count(inp, q), dim))
    return render_table(config.format, TABLE_HEADER, rows, string_columns=("count",))


def _run_zeta(config: RunConfig) -> str:
    inp, q = _single(config)
    factors = zeta_factors(inp, q)
    series = zeta_series(factors, config.zeta_terms) if config.zeta_terms else []
    if config.format == "json":
        return render_json(
            {
                "p": inp.p,
                "e": inp.e,
                "q": q,
                "factors": [{"n": n, "multiplicity": c_n} for n, c_n in factors.factors],
                "series": [str(z) for z in series],
            }
        )
    if config.format == "csv":
        return render_table("csv", ("n", "root", "multiplicity"), [(n, q**n, c_n) for n, c_n in factors.factors])
    lines = [factors.render()]
    if series:
        lines.append(" + ".join(f"{z}T^{j}" if j else str(z) for j, z in enumerate(series)) + " + ...")
    return render_plain(lines)


def _run_dim(config: RunConfig) -> str:
    assert config.e is not None
    inp = decompose_e(config.p[0], config.e)
    dim = moduli_dimension(inp)
    if config.format == "json":
        return render_json({"p": inp.p, "e": inp.e, "dimension": dim})
    if config.format == "csv":
        return render_table("csv", ("p", "e", "dimension"), [(inp.p, inp.e, dim)])
    return render_plain([dim])


def _run_census(config: RunConfig) -> str:
    if config.census_sum:
        inp, q = _single(config)
        total = census_count(inp, q)
        if config.format == "json":
            return render_json({"p": inp.p, "e": inp.e, "q": q, "count": str(total)})
        if config.format == "csv":
            return render_table("csv", ("p", "e", "q", "count"), [(inp.p, inp.e, q, total)])
        return render_plain([total])
    assert config.e is not None
    inp = decompose_e(config.p[0], config.e)
    return render_table(config.format, CENSUS_HEADER, [cell.as_row() for cell in census(inp)])


def _run_oracle(config: RunConfig, settings: FlatModelsConfig) -> tuple[int, str]:
    inp, q = _single(config)
    _check_oracle_caps(config, settings, inp, q)
    spec = field_make(inp.p, prime_power_exponent(q, inp.p))
    report = oracle_count(inp, spec, prune=config.prune, workers=config.workers, raise_on_failure=False)
    code = 2 if report.cross_check_failures else 0
    if report.cross_check_failures:
        logger.error("valuation and matrix conditions disagree", failures=len(report.cross_check_failures))
    if config.format == "json":
        return code, render_json(report.to_payload())
    rows = [(s, t, n) for (s, t), n in sorted(report.cells.items())]
    if config.format == "csv":
        return code, render_table("csv", ("s", "t", "count"), rows)
    lines: List[Any] = [f"{s} {t} {n}" for s, t, n in rows]
    lines.append(f"total {report.total}")
    lines.extend(f"mismatch {f.s} {f.t} {f.v}" for f in report.cross_check_failures)
    return code, render_plain(lines)


def _run_verify(config: RunConfig, settings: FlatModelsConfig) -> tuple[int, str]:
    suite = settings.suites.get(config.suite)
    if suite is None:
        known = ", ".join(sorted(settings.suites))
        raise ValidationError(f"unknown suite {config.suite!r} (known: {known})", argument="suite")
    results = run_suite(suite, workers=config.workers)
    code = 0 if all(r.passed for r in results) else 2
    if config.format == "json":
        return code, render_json([{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results])
    if config.format == "csv":
        return code, render_table("csv", ("name", "passed", "detail"), [(r.name, r.passed, r.detail) for r in results])
    return code, render_plain(r.line() for r in results)


def run(config: RunConfig, settings: Optional[FlatModelsConfig] = None) -> tuple[int, str]:
    """Execute one invocation; returns (exit status, rendered output)."""
    settings = settings or FlatModelsConfig()
    with logger.operation(f"cli.{config.subcommand}"):
        if config.subcommand == "count":
            result = 0, _run_count(config)
        elif config.subcommand == "table":
            result = 0, _run_table(config)
        elif config.subcommand == "zeta":
            result = 0, _run_zeta(config)
        elif config.subcommand == "dim":
            result = 0, _run_dim(config)
        elif config.subcommand == "census":
            result = 0, _run_census(config)
        elif config.subcommand == "oracle":
            result = _run_oracle(config, settings)
        else:
            result = _run_verify(config, settings)
    logger.debug("counters", **metrics.snapshot())
    return result


def _invoke(
    subcommand: str,
    *,
    config_path: Optional[str],
    set_items: Optional[List[str]],
    verbose: bool,
    fmt: Optional[str],
    output: Optional[str],
    **fields: Any,
) -> None:
    set_verbose(verbose)
    try:
        settings = load_config(config_path, set_overrides=set_items)
        if fields.get("prune") is False:
            fields["prune"] = settings.oracle.prune
        if fields.get("workers", 0) is None:
            fields["workers"] = settings.oracle.workers
        try:
            config = RunConfig(subcommand=subcommand, format=fmt or settings.output.format, output=output, **fields)
        except PydanticValidationError as exc:
            first = exc.errors()[0]
            where = ".".join(str(x) for x in first.get("loc", ()))
            raise ValidationError(first["msg"].removeprefix("Value error, "), argument=where or None) from exc
        code, text = run(config, settings)
    except FlatModelsError as exc:
        typer.echo(f"Error: {exc.message}", err=True)
        raise typer.Exit(get_exit_code(exc))
    write_output(text, config.output)
    if code:
        raise typer.Exit(code)


def _as_list(value: Optional[int]) -> List[int]:
    return [] if value is None else [value]


@app.command("count")
def count_cmd(
    p: Optional[int] = Option(None, "--p", help="Odd prime p"),
    e: Optional[int] = Option(None, "--e", help="Ramification index e >= 1"),
    k: int = Option(1, "--k", help="Residue field degree; q = p^k"),
    q: Optional[int] = Option(None, "--q", help="Field size q (a power of p); replaces --k"),
    fmt: Optional[str] = Option(None, "--format", help="plain, json or csv"),
    output: Optional[str] = Option(None, "-o", "--output", help="Write to this file instead of stdout"),
    config: Optional[str] = Option(None, "-c", "--config", help="Path to a YAML settings file"),
    set_items: Optional[List[str]] = Option(None, "--set", help="Override a setting: key.path=value"),
    verbose: bool = Option(False, "-v", "--verbose", help="Enable debug logging on stderr"),
) -> None:
    """Number of finite flat models over GF(q)."""
    _invoke("count", config_path=config, set_items=set_items, verbose=verbose, fmt=fmt, output=output,
            p=_as_list(p), e=e, k=[k], q=q)


@app.command("table")
def table_cmd(
    p: Optional[List[int]] = Option(None, "--p", help="Odd prime; repeat for several"),
    e: Optional[int] = Option(None, "--e", help="Single ramification index"),
    e_min: Optional[int] = Option(None, "--e-min", help="Smallest e of the range"),
    e_max: Optional[int] = Option(None, "--e-max", help="Largest e of the range"),
    k: Optional[List[int]] = Option(None, "--k", help="Residue field degree; repeat for several"),
    q: Optional[int] = Option(None, "--q", help="Field size q (a power of p); replaces --k"),
    fmt: Optional[str] = Option(None, "--format", help="plain, json or csv"),
    output: Optional[str] = Option(None, "-o", "--output", help="Write to this file instead of stdout"),
    config: Optional[str] = Option(None, "-c", "--config", help="Path to a YAML settings file"),
    set_items: Optional[List[str]] = Option(None, "--set", help="Override a setting: key.path=value"),
    verbose: bool = Option(False, "-v", "--verbose", help="Enable debug logging on stderr"),
) -> None:
    """Counts and dimensions over a grid of (p, e, q), ordered by (p, e, k)."""
    _invoke("table", config_path=config, set_items=set_items, verbose=verbose, fmt=fmt, output=output,
            p=p or [], e=e, e_min=e_min, e_max=e_max, k=k or [1], q=q)


@app.command("zeta")
def zeta_cmd(
    p: Optional[int] = Option(None, "--p", help="Odd prime p"),
    e: Optional[int] = Option(None, "--e", help="Ramification index e >= 1"),
    k: int = Option(1, "--k", help="Residue field degree; q = p^k"),
    q: Optional[int] = Option(None, "--q", help="Field size q (a power of p); replaces --k"),
    terms: int = Option(0, "--terms", help="Also expand Z(T) to this many coefficients"),
    fmt: Optional[str] = Option(None, "--format", help="plain, json or csv"),
    output: Optional[str] = Option(None, "-o", "--output", help="Write to this file instead of stdout"),
    config: Optional[str] = Option(None, "-c", "--config", help="Path to a YAML settings file"),
    set_items: Optional[List[str]] = Option(None, "--set", help="Override a setting: key.path=value"),
    verbose: bool = Option(False, "-v", "--verbose", help="Enable debug logging on stderr"),
) -> None:
    """Factorisation of the zeta function of the moduli space."""
    _invoke("zeta", config_path=config, set_items=set_items, verbose=verbose, fmt=fmt, output=output,
            p=_as_list(p), e=e, k=[k], q=q, zeta_terms=terms)


@app.command("dim")
def dim_cmd(
    p: Optional[int] = Option(None, "--p", help="Odd prime p"),
    e: Optional[int] = Option(None, "--e", help="Ramification index e >= 1"),
    fmt: Optional[str] = Option(None, "--format", help="plain, json or csv"),
    output: Optional[str] = Option(None, "-o", "--output", help="Write to this file instead of stdout"),
    config: Optional[str] = Option(None, "-c", "--config", help="Path to a YAML settings file"),
    set_items: Optional[List[str]] = Option(None, "--set", help="Override a setting: key.path=value"),
    verbose: bool = Option(False, "-v", "--verbose", help="Enable debug logging on stderr"),
) -> None:
    """Dimension of the moduli space."""
    _invoke("dim", config_path=config, set_items=set_items, verbose=verbose, fmt=fmt, output=output,
            p=_as_list(p), e=e)


@app.command("census")
def census_cmd(
    p: Optional[int] = Option(None, "--p", help="Odd prime p"),
    e: Optional[int] = Option(None, "--e", help="Ramification index e >= 1"),
    k: int = Option(1, "--k", help="Residue field degree, used with --sum"),
    q: Optional[int] = Option(None, "--q", help="Field size, used with --sum"),
    census_sum: bool = Option(False, "--sum", help="Print sum of q^h over cells instead of the rows"),
    fmt: Optional[str] = Option(None, "--format", help="plain, json or csv"),
    output: Optional[str] = Option(None, "-o", "--output", help="Write to this file instead of stdout"),
    config: Optional[str] = Option(None, "-c", "--config", help="Path to a YAML settings file"),
    set_items: Optional[List[str]] = Option(None, "--set", help="Override a setting: key.path=value"),
    verbose: bool = Option(False, "-v", "--verbose", help="Enable debug logging on stderr"),
) -> None:
    """Per-cell rows (s, t, case, r, h) of the lattice census."""
    _invoke("census", config_path=config, set_items=set_items, verbose=verbose, fmt=fmt, output=output,
            p=_as_list(p), e=e, k=[k], q=q, census_sum=census_sum)


@app.command("oracle")
def oracle_cmd(
    p: Optional[int] = Option(None, "--p", help="Odd prime p"),
    e: Optional[int] = Option(None, "--e", help="Ramification index e >= 1"),
    k: int = Option(1, "--k", help="Residue field degree; q = p^k"),
    q: Optional[int] = Option(None, "--q", help="Field size q (a power of p); replaces --k"),
    prune: bool = Option(False, "--prune", help="Skip candidate blocks that cannot satisfy the condition"),
    workers: Optional[int] = Option(None, "--workers", help="Worker processes for the cell scan"),
    allow_large: bool = Option(False, "--allow-large", help="Lift the e and search-space caps"),
    fmt: Optional[str] = Option(None, "--format", help="plain, json or csv"),
    output: Optional[str] = Option(None, "-o", "--output", help="Write to this file instead of stdout"),
    config: Optional[str] = Option(None, "-c", "--config", help="Path to a YAML settings file"),
    set_items: Optional[List[str]] = Option(None, "--set", help="Override a setting: key.path=value"),
    verbose: bool = Option(False, "-v", "--verbose", help="Enable debug logging on stderr"),
) -> None:
    """Brute-force lattice enumeration, cross-checking both forms of the condition."""
    _invoke("oracle", config_path=config, set_items=set_items, verbose=verbose, fmt=fmt, output=output,
            p=_as_list(p), e=e, k=[k], q=q, prune=prune, workers=workers, allow_large=allow_large)


@app.command("verify")
def verify_cmd(
    suite: str = Option("desk", "--suite", help="Named suite from the settings (desk, quick, ...)"),
    workers: Optional[int] = Option(None, "--workers", help="Worker processes for oracle runs"),
    fmt: Optional[str] = Option(None, "--format", help="plain, json or csv"),
    output: Optional[str] = Option(None, "-o", "--output", help="Write to this file instead of stdout"),
    config: Optional[str] = Option(None, "-c", "--config", help="Path to a YAML settings file"),
    set_items: Optional[List[str]] = Option(None, "--set", help="Override a setting: key.path=value"),
    verbose: bool = Option(False, "-v", "--verbose", help="Enable debug logging on stderr"),
) -> None:
    """Run the property suite and print one PASS/FAIL line per property."""
    _invoke("verify", config_path=config, set_items=set_items, verbose=verbose, fmt=fmt, output=output,
            suite=suite, workers=workers)


@app.callback(invoke_without_command=True)
def version_callback(
    ctx: typer.Context,
    version: bool = Option(False, "--version", help="Show version and exit"),
) -> None:
    """flatmodels: exact counts of finite flat models."""
    if version:
        from . import __version__

        typer.echo(__version__)
        raise typer.Exit(0)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit status instead of calling sys.exit."""
    try:
        rv = app(args=list(argv) if argv is not None else None, standalone_mode=False)
    except _ABORTS:
        typer.echo("Aborted.", err=True)
        return 1
    except _USAGE_ERRORS as exc:
        exc.show()  # type: ignore[attr-defined]
        return 1
    except FlatModelsError as exc:
        typer.echo(f"Error: {exc.message}", err=True)
        return get_exit_code(exc)
    return rv if isinstance(rv, int) else 0


__all__ = ["app", "run", "main"]
