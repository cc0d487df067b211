"""Command-line front end: simulate, compare, fit, serve."""

from __future__ import annotations

import os
import sys
from pathlib import Path

import click

from . import __version__
from .metrics import (
    GridSpec,
    ObservedDataError,
    SeriesStatsError,
    fit_transmission_scale,
    ingest_observed,
)
from .outputs import (
    document_for_preset,
    simulate_request,
    summarize,
    to_csv,
    to_svg,
)
from .tokyo import (
    PRESET_IDS,
    SIM_HORIZON_DAYS,
    DiseaseParams,
    MobilityBehaviorParams,
    RestaurantParams,
    ScenarioDocument,
    ScenarioFormatError,
    UnknownPresetError,
    apply_overrides,
    load_scenario,
    save_scenario,
)

PORT_ENV_VAR = "NPIFLOW_PORT"


def _resolve_document(preset_name: str | None, scenario_path: str | None) -> ScenarioDocument:
    if (preset_name is None) == (scenario_path is None):
        raise click.UsageError("provide exactly one of --preset or --scenario")
    if preset_name is not None:
        try:
            return document_for_preset(preset_name)
        except UnknownPresetError:
            raise click.ClickException(
                f"unknown preset {preset_name!r}; valid presets: {', '.join(PRESET_IDS)}"
            ) from None
    try:
        return load_scenario(scenario_path)
    except (ScenarioFormatError, OSError) as exc:
        raise click.ClickException(f"cannot load scenario {scenario_path}: {exc}") from None


def _parse_overrides(pairs: tuple[str, ...]) -> dict[str, float]:
    overrides: dict[str, float] = {}
    for pair in pairs:
        if "=" not in pair:
            raise click.UsageError(f"--set expects name=value, got {pair!r}")
        key, _, raw = pair.partition("=")
        try:
            overrides[key.strip()] = float(raw)
        except ValueError:
            raise click.UsageError(f"--set {key}: not a number: {raw!r}") from None
    return overrides


@click.group()
@click.version_option(__version__)
def main():
    """Stock-and-flow what-if simulator for epidemic intervention policies."""


@main.command()
@click.option("--preset", "preset_name", type=str, default=None,
              help=f"Built-in scenario: {', '.join(PRESET_IDS)}.")
@click.option("--scenario", "scenario_path", type=click.Path(), default=None,
              help="Path to a scenario JSON document.")
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="CSV output path (default: stdout).")
@click.option("--svg", "svg_path", type=click.Path(), default=None,
              help="Also write a static SVG line chart of daily confirmed cases.")
@click.option("--horizon", type=int, default=SIM_HORIZON_DAYS, show_default=True,
              help="Days to simulate (records = horizon + 1).")
@click.option("--dt", "step_days", type=float, default=1.0, show_default=True,
              help="Integration step in days (must divide one day evenly).")
@click.option("--set", "set_pairs", multiple=True, metavar="NAME=VALUE",
              help="Parameter override, e.g. disease.transmission_scale=1.3.")
def simulate(preset_name, scenario_path, out_path, svg_path, horizon, step_days, set_pairs):
    """Run one scenario and write the per-day series as CSV."""
    document = _resolve_document(preset_name, scenario_path)
    try:
        output = simulate_request(
            document, horizon_days=horizon, step_days=step_days,
            extra_overrides=_parse_overrides(set_pairs),
        )
    except (ScenarioFormatError, ValueError) as exc:
        raise click.ClickException(str(exc)) from None
    csv_text = to_csv(output)
    if out_path is None:
        click.echo(csv_text, nl=False)
    else:
        try:
            Path(out_path).write_text(csv_text, encoding="utf-8")
        except OSError as exc:
            raise click.ClickException(f"cannot write {out_path}: {exc}") from None
        click.echo(
            f"wrote {len(output.dates)} daily records for "
            f"{document.spec.name!r} to {out_path}"
        )
    if svg_path is not None:
        Path(svg_path).write_text(to_svg(output), encoding="utf-8")
        click.echo(f"wrote chart to {svg_path}")


_METRIC_COLUMNS = {
    "all": ("cumulative_confirmed", "peak_daily_confirmed", "peak_day",
            "cumulative_visits_normalized", "mean_ewom_mass"),
    "confirmed": ("cumulative_confirmed", "peak_daily_confirmed", "peak_day"),
    "visits": ("cumulative_visits_normalized",),
    "ewom": ("mean_ewom_mass",),
}


@main.command()
@click.option("--preset", "preset_names", type=str, multiple=True,
              help="Preset to include (repeatable).")
@click.option("--scenario", "scenario_paths", type=click.Path(), multiple=True,
              help="Scenario JSON to include (repeatable).")
@click.option("--metric", type=click.Choice(sorted(_METRIC_COLUMNS)), default="all",
              show_default=True, help="Which summary columns to print.")
@click.option("--horizon", type=int, default=SIM_HORIZON_DAYS, show_default=True)
@click.option("--set", "set_pairs", multiple=True, metavar="NAME=VALUE")
def compare(preset_names, scenario_paths, metric, horizon, set_pairs):
    """Summarise two or more scenarios side by side."""
    documents = [_resolve_document(p, None) for p in preset_names]
    documents += [_resolve_document(None, s) for s in scenario_paths]
    if len(documents) < 2:
        raise click.UsageError("need at least two scenarios to compare")
    overrides = _parse_overrides(set_pairs)
    columns = _METRIC_COLUMNS[metric]
    rows = []
    for document in documents:
        summary = summarize(
            simulate_request(document, horizon_days=horizon, extra_overrides=overrides)
        )
        rows.append([summary.name] + [getattr(summary, c) for c in columns])

    header = ["scenario"] + list(columns)
    widths = [
        max(len(header[i]), *(len(_cell(r[i])) for r in rows))
        for i in range(len(header))
    ]
    click.echo("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        click.echo("  ".join(_cell(v).ljust(w) for v, w in zip(row, widths)))


def _cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


@main.command()
@click.argument("observed_csv", type=click.Path(exists=True))
@click.option("--preset", "preset_name", default="realistic", show_default=True,
              help="Scenario under which to calibrate.")
@click.option("--scenario", "scenario_path", type=click.Path(), default=None,
              help="Calibrate under a scenario JSON instead of a preset.")
@click.option("--grid-min", type=float, default=0.5, show_default=True)
@click.option("--grid-max", type=float, default=2.0, show_default=True)
@click.option("--grid-step", type=float, default=0.1, show_default=True)
@click.option("--target", default="daily_confirmed", show_default=True,
              help="Simulated series to fit against the observed values.")
@click.option("--write-scenario", "refit_path", type=click.Path(), default=None,
              help="Write a scenario JSON pinning the fitted scale.")
def fit(observed_csv, preset_name, scenario_path, grid_min, grid_max, grid_step,
        target, refit_path):
    """Grid-search the transmission scale against an observed CSV."""
    document = _resolve_document(
        preset_name if scenario_path is None else None, scenario_path
    )
    try:
        observed = ingest_observed(Path(observed_csv).read_text(encoding="utf-8"))
    except ObservedDataError as exc:
        raise click.ClickException(f"{observed_csv}: {exc}") from None

    disease, mobility, restaurant = apply_overrides(
        DiseaseParams(), MobilityBehaviorParams(), RestaurantParams(),
        document.param_overrides,
    )
    from .engine import RunConfig  # local import to keep CLI import light

    cfg = RunConfig(start=document.start, horizon_days=SIM_HORIZON_DAYS)
    try:
        grid = GridSpec(grid_min, grid_max, grid_step)
        fit_result = fit_transmission_scale(
            disease, mobility, restaurant, document.spec, observed, grid, cfg,
            target_series=target,
        )
    except SeriesStatsError as exc:
        raise click.ClickException(str(exc)) from None

    click.echo(f"grid: {fit_result.grid[0]} .. {fit_result.grid[-1]} ({len(fit_result.grid)} points)")
    for scale, loss in zip(fit_result.grid, fit_result.losses):
        marker = "  <-- best" if scale == fit_result.best_scale else ""
        click.echo(f"  scale={scale:<6g} rmse={loss:.6f}{marker}")
    click.echo(f"best transmission scale: {fit_result.best_scale}")

    if refit_path is not None:
        refit_overrides = dict(document.param_overrides)
        refit_overrides["disease.transmission_scale"] = fit_result.best_scale
        refit = ScenarioDocument(
            spec=document.spec, start=document.start, param_overrides=refit_overrides
        )
        save_scenario(refit, refit_path)
        click.echo(f"wrote refit scenario to {refit_path}")


@main.command()
@click.option("--port", type=int, default=None,
              help=f"Listen port (default: ${PORT_ENV_VAR} or 8000).")
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(port, host):
    """Serve the HTTP API (and the workbench UI when built)."""
    import uvicorn

    from .service import app

    if port is None:
        port = int(os.environ.get(PORT_ENV_VAR, "8000"))
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main(prog_name="npiflow", args=sys.argv[1:])
