"""
Command-line entry point: `orbit-engine` (or `python main.py`).

Exit codes: 0 success, 1 verification failure, 2 input error,
3 internal consistency failure.
"""

from __future__ import annotations
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import click

from engine.core.cache import ReportCache
from engine.core.config_manager import AnalysisConfig, config_manager
from engine.core.pipeline import analyze as run_analysis
from engine.core.report import OrbitReport
from engine.errors import EngineError, InputError, VerificationError
from engine.fixtures.catalog import list_fixtures
from engine.fixtures.speh import verify_speh
from engine.ktypes.cone import Cone, cone_contains, inequalities
from engine.ktypes.lattice import KTypeLattice, enumerate_ktypes, multiplicity, shifted_lattice
from engine.lie.realization import RealFormDescriptor, build_real_form
from engine.lie.roots import RootDatum, build_root_datum
from engine.math.mat import ExactMatrix

logger = logging.getLogger(__name__)


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _fail(exc: EngineError) -> None:
    click.echo(f"error: {exc}", err=True)
    click.get_current_context().exit(exc.exit_code)


def _flatten(data: Any, prefix: str = "") -> List[Tuple[str, Any]]:
    if isinstance(data, dict):
        rows = []
        for key in sorted(data):
            rows += _flatten(data[key], f"{prefix}.{key}" if prefix else str(key))
        return rows
    if isinstance(data, list) and any(isinstance(v, (dict, list)) for v in data):
        rows = []
        for i, value in enumerate(data):
            rows += _flatten(value, f"{prefix}[{i}]")
        return rows
    return [(prefix, json.dumps(data, ensure_ascii=False))]


def _emit(data: Any, fmt: str, out: Optional[Path] = None) -> None:
    if fmt == "table":
        rows = _flatten(data)
        width = max((len(k) for k, _ in rows), default=0)
        text = "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)
    else:
        text = json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)
    if out is not None:
        out.write_text(text + "\n", encoding="utf-8")
        click.echo(f"wrote {out}", err=True)
    else:
        click.echo(text)


def _parse_weight(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.replace("(", "").replace(")", "").split(",") if c.strip())
    except ValueError as exc:
        raise InputError(f"cannot parse weight '{text}'") from exc


def _config(fixture: Optional[str], config: Optional[Path], **overrides: Any) -> AnalysisConfig:
    if (fixture is None) == (config is None):
        raise InputError("give exactly one of --fixture or --config")
    if fixture is not None:
        return config_manager.from_fixture(fixture, **overrides)
    return config_manager.load(config, **overrides)


def _cache(enabled: bool) -> Optional[ReportCache]:
    return ReportCache(config_manager.get("cache_dir")) if enabled else None


def _load_report(
    report: Optional[Path], fixture: Optional[str], config: Optional[Path], use_cache: bool, **overrides: Any
) -> OrbitReport:
    if report is not None:
        try:
            return OrbitReport.loads(report.read_text(encoding="utf-8"))
        except OSError as exc:
            raise InputError(f"cannot read report {report}: {exc}") from exc
    return run_analysis(_config(fixture, config, **overrides), _cache(use_cache))


def _root_datum(report: OrbitReport) -> Optional[RootDatum]:
    """Rebuilds the positive system of a report from its grading element."""
    if report.triple is None:
        return None
    realization = build_real_form(RealFormDescriptor.parse(report.algebra))
    x = realization.coordinates(ExactMatrix.from_json(report.triple["x"]))
    return build_root_datum(realization, x)


def _lattice(report: OrbitReport) -> KTypeLattice:
    return KTypeLattice.from_weights(report.lattice_generators, report.lattice_dimension)


# shared options
def _analysis_options(func):
    for option in reversed(
        [
            click.option("--fixture", "fixture", default=None, help="Built-in fixture name."),
            click.option("--config", "config", type=click.Path(path_type=Path, exists=True), default=None,
                         help="JSON or TOML config file."),
            click.option("--max-degree", type=int, default=None, help="Highest generator degree searched."),
            click.option("--bound", type=int, default=None, help="Max-norm bound for K-type enumeration."),
            click.option("--seed", type=int, default=None, help="Random seed."),
            click.option("--samples", type=int, default=None, help="Sphericity samples."),
            click.option("--cache/--no-cache", "use_cache", default=True, help="Reuse cached reports."),
        ]
    ):
        func = option(func)
    return func


_format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "table"]), default="json", help="Output format."
)


@click.group(name="orbit-engine")
@click.option("-v", "--verbose", count=True, help="Repeat for more logging.")
def cli(verbose: int) -> None:
    """Nilpotent K_C-orbits, their invariants and K-types, in exact arithmetic."""
    _configure_logging(verbose)


@cli.command()
@_analysis_options
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Write the report here.")
@_format_option
def analyze(fixture, config, max_degree, bound, seed, samples, use_cache, out, fmt) -> None:
    """Run the full analysis of one orbit."""
    try:
        cfg = _config(fixture, config, max_degree=max_degree, bound=bound, seed=seed, samples=samples)
        report = run_analysis(cfg, _cache(use_cache))
    except EngineError as exc:
        _fail(exc)
        return
    _emit(report.to_json(), fmt, out or cfg.output)


@cli.command()
@_format_option
def fixtures(fmt) -> None:
    """List the built-in fixtures."""
    _emit(list_fixtures(), fmt)


@cli.command(name="verify-speh")
@click.option("--max-degree", type=int, default=None)
@click.option("--bound", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--samples", type=int, default=None)
@_format_option
def verify_speh_command(max_degree, bound, seed, samples, fmt) -> None:
    """Reproduce the K-types of the Speh representation."""
    try:
        result = verify_speh(max_degree=max_degree, bound=bound, seed=seed, samples=samples)
    except EngineError as exc:
        _fail(exc)
        return
    _emit(result.to_json(), fmt)
    if not result.passed:
        names = ", ".join(c.name for c in result.failures)
        _fail(VerificationError(f"verify-speh failed: {names}"))


@cli.command()
@_analysis_options
@click.option("--report", type=click.Path(path_type=Path, exists=True), default=None,
              help="Saved report to query instead of analysing.")
@click.option("--weight", "weights", multiple=True, help="Multiplicity query, e.g. 4,2.")
@click.option("--shift", default=None, help="Lowest K-type mu for the shifted lattice, e.g. 1,1.")
@_format_option
def ktypes(fixture, config, max_degree, bound, seed, samples, use_cache, report, weights, shift, fmt) -> None:
    """Query the K-type lattice of a small spherical orbit."""
    try:
        rep = _load_report(report, fixture, config, use_cache,
                           max_degree=max_degree, bound=bound, seed=seed, samples=samples)
        lattice = _lattice(rep)
        limit = bound if bound is not None else rep.parameters.get("bound", config_manager.get("bound"))
        data: Dict[str, Any] = {
            **lattice.to_json(),
            "ktypes": [{"weight": list(w), "multiplicity": m} for w, m in enumerate_ktypes(lattice, limit)],
        }
        if weights:
            data["multiplicities"] = {
                text: multiplicity(lattice, _parse_weight(text)) for text in weights
            }
        if shift is not None:
            data["shifted"] = [
                list(w) for w in shifted_lattice(lattice, _parse_weight(shift), limit, _root_datum(rep))
            ]
    except EngineError as exc:
        _fail(exc)
        return
    _emit(data, fmt)


@cli.command()
@_analysis_options
@click.option("--report", type=click.Path(path_type=Path, exists=True), default=None,
              help="Saved report to query instead of analysing.")
@click.option("--point", "points", multiple=True, help="Membership query, e.g. 3,1.")
@_format_option
def cone(fixture, config, max_degree, bound, seed, samples, use_cache, report, points, fmt) -> None:
    """Describe the asymptotic cone and test points against it."""
    try:
        rep = _load_report(report, fixture, config, use_cache,
                           max_degree=max_degree, bound=bound, seed=seed, samples=samples)
        lattice = _lattice(rep)
        c = Cone(lattice.generators, lattice.dimension)
        data: Dict[str, Any] = {
            "generators": [list(g) for g in c.rays],
            "cone_inequalities": inequalities(c),
        }
        if points:
            data["contains"] = {text: cone_contains(c, _parse_weight(text)) for text in points}
    except EngineError as exc:
        _fail(exc)
        return
    _emit(data, fmt)


if __name__ == "__main__":
    cli()
