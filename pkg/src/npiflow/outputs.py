"""Request resolution and output shaping shared by the CLI and the service.

Both front ends funnel through simulate_request(), so they produce
bit-identical series for the same request.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from typing import Mapping, Sequence

from .engine import RunConfig, SimulationResult, run
from .tokyo import (
    SIM_HORIZON_DAYS,
    DiseaseParams,
    MobilityBehaviorParams,
    RestaurantParams,
    ScenarioDocument,
    apply_overrides,
    build_model,
    preset,
)

CUMULATIVE_CONFIRMED = "cumulative_confirmed"


@dataclass(frozen=True)
class SimOutput:
    """A completed run plus derived reporting series."""

    document: ScenarioDocument
    config: RunConfig
    result: SimulationResult
    series: dict[str, tuple[float, ...]]  # result series + cumulative_confirmed

    @property
    def dates(self) -> tuple[dt.date, ...]:
        return self.result.dates


def document_for_preset(preset_name: str) -> ScenarioDocument:
    return ScenarioDocument(spec=preset(preset_name))


def simulate_request(
    document: ScenarioDocument,
    horizon_days: int = SIM_HORIZON_DAYS,
    step_days: float = 1.0,
    extra_overrides: Mapping[str, float] | None = None,
) -> SimOutput:
    """Build the Tokyo model for a scenario document and run it.

    Overrides in the document apply first; ``extra_overrides`` (e.g. from
    CLI flags) win over the document's own.
    """
    overrides = dict(document.param_overrides)
    if extra_overrides:
        overrides.update(extra_overrides)
    disease, mobility, restaurant = apply_overrides(
        DiseaseParams(), MobilityBehaviorParams(), RestaurantParams(), overrides
    )
    model = build_model(disease, mobility, restaurant, document.spec)
    cfg = RunConfig(start=document.start, horizon_days=horizon_days, dt=step_days)
    result = run(model, cfg)

    series = dict(result.series)
    daily = series["daily_confirmed"]
    cumulative = []
    total = 0.0
    for value in daily:
        total += value
        cumulative.append(total)
    series[CUMULATIVE_CONFIRMED] = tuple(cumulative)
    return SimOutput(document=document, config=cfg, result=result, series=series)


def to_csv(output: SimOutput) -> str:
    """Render ``day,date,<series...>`` rows; floats keep full precision."""
    names = list(output.series)
    lines = ["day,date," + ",".join(names)]
    for day, date in enumerate(output.dates):
        values = ",".join(repr(output.series[name][day]) for name in names)
        lines.append(f"{day},{date.isoformat()},{values}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ScenarioSummary:
    """Headline numbers used by the comparison table."""

    name: str
    cumulative_confirmed: float
    peak_daily_confirmed: float
    peak_day: int
    cumulative_visits_normalized: float
    mean_ewom_mass: float


def summarize(output: SimOutput) -> ScenarioSummary:
    daily = output.series["daily_confirmed"]
    peak_day = max(range(len(daily)), key=daily.__getitem__)
    visits = output.series["visits_normalized"]
    ewom = output.series["ewom_mass"]
    return ScenarioSummary(
        name=output.document.spec.name,
        cumulative_confirmed=output.series[CUMULATIVE_CONFIRMED][-1],
        peak_daily_confirmed=daily[peak_day],
        peak_day=peak_day,
        cumulative_visits_normalized=sum(visits),
        mean_ewom_mass=sum(ewom) / len(ewom),
    )


def to_svg(
    output: SimOutput,
    series_names: Sequence[str] = ("daily_confirmed",),
    width: int = 900,
    height: int = 360,
) -> str:
    """A minimal static line chart (one polyline per series)."""
    palette = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b")
    margin = 40
    plot_w, plot_h = width - 2 * margin, height - 2 * margin
    n = len(output.dates)
    peak = max(max(output.series[name]) for name in series_names) or 1.0

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
    ]
    for i, name in enumerate(series_names):
        points = []
        for day, value in enumerate(output.series[name]):
            x = margin + plot_w * day / (n - 1)
            y = height - margin - plot_h * value / peak
            points.append(f"{x:.2f},{y:.2f}")
        colour = palette[i % len(palette)]
        parts.append(
            f'<polyline fill="none" stroke="{colour}" stroke-width="1.5" '
            f'points="{" ".join(points)}"/>'
        )
        parts.append(
            f'<text x="{margin + 8}" y="{margin + 16 + 16 * i}" fill="{colour}" '
            f'font-size="13">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
