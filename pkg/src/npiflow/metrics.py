"""Observed-data ingestion, comparison statistics, and scale calibration.

Observed CSV format: header ``date,value``, ISO-8601 dates, decimal
values, UTF-8; lines starting with ``#`` are ignored. Comparison
statistics are computed over the strict date intersection of the two
series (no interpolation of missing days).
"""

from __future__ import annotations

import datetime as dt
import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .engine import RunConfig, SimulationResult, run
from .tokyo import (
    DiseaseParams,
    MobilityBehaviorParams,
    RestaurantParams,
    ScenarioSpec,
    build_model,
)

RAW = "raw"
RELATIVE_TO_BASELINE = "relative-to-baseline"
RELATIVE_TO_PRIOR_YEAR = "relative-to-prior-year"


class ObservedDataError(ValueError):
    """Malformed observed data; carries the 1-based source line when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class SeriesStatsError(ValueError):
    """Series unfit for the requested statistic (length, variance, overlap)."""


@dataclass(frozen=True)
class ObservedSeries:
    """A date-indexed real-world metric."""

    name: str
    dates: tuple[dt.date, ...]
    values: tuple[float, ...]
    normalization: str = RAW

    def __post_init__(self):
        if len(self.dates) != len(self.values):
            raise ObservedDataError("dates and values differ in length")
        for a, b in zip(self.dates, self.dates[1:]):
            if b <= a:
                raise ObservedDataError(f"dates not strictly increasing at {b}")
        for v in self.values:
            if not math.isfinite(v):
                raise ObservedDataError(f"non-finite value {v}")

    def __len__(self) -> int:
        return len(self.dates)

    def as_mapping(self) -> dict[dt.date, float]:
        return dict(zip(self.dates, self.values))


def ingest_observed(text: str, name: str = "observed") -> ObservedSeries:
    """Parse ``date,value`` CSV content into a raw ObservedSeries."""
    dates: list[dt.date] = []
    values: list[float] = []
    seen: set[dt.date] = set()
    header_done = False
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if not header_done:
            cols = [c.strip() for c in line.split(",")]
            if cols != ["date", "value"]:
                raise ObservedDataError(
                    f"expected header 'date,value', got {line!r}", lineno
                )
            header_done = True
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise ObservedDataError(f"expected 'date,value', got {line!r}", lineno)
        try:
            date = dt.date.fromisoformat(parts[0].strip())
        except ValueError:
            raise ObservedDataError(f"bad date {parts[0]!r}", lineno) from None
        try:
            value = float(parts[1])
        except ValueError:
            raise ObservedDataError(f"bad value {parts[1]!r}", lineno) from None
        if date in seen:
            raise ObservedDataError(f"duplicate date {date.isoformat()}", lineno)
        if dates and date < dates[-1]:
            raise ObservedDataError(
                f"dates out of order: {date.isoformat()} after {dates[-1].isoformat()}",
                lineno,
            )
        seen.add(date)
        dates.append(date)
        values.append(value)
    if not header_done:
        raise ObservedDataError("no 'date,value' header found")
    return ObservedSeries(name, tuple(dates), tuple(values))


def series_from_csv(text: str, column: str, name: str | None = None) -> ObservedSeries:
    """Extract a (date, column) series from a wide CSV with a ``date`` column.

    Accepts both the two-column observed format and the simulator's own
    CSV output, so every emitted file re-parses here.
    """
    lines = [
        line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ObservedDataError("empty CSV")
    header = [c.strip() for c in lines[0].split(",")]
    if "date" not in header or column not in header:
        raise ObservedDataError(
            f"CSV must contain 'date' and {column!r} columns, got {header}"
        )
    date_ix, value_ix = header.index("date"), header.index(column)
    dates: list[dt.date] = []
    values: list[float] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        try:
            dates.append(dt.date.fromisoformat(parts[date_ix].strip()))
            values.append(float(parts[value_ix]))
        except (ValueError, IndexError):
            raise ObservedDataError(f"bad row {line!r}", lineno) from None
    return ObservedSeries(name or column, tuple(dates), tuple(values))


def normalize(
    series: ObservedSeries,
    mode: str,
    reference: float | ObservedSeries | None = None,
) -> ObservedSeries:
    """Divide values by a reference: a scalar baseline or the same-date
    value of a prior-year series; raw mode returns the series unchanged."""
    if mode == RAW:
        return replace(series, normalization=RAW)
    if mode == RELATIVE_TO_BASELINE:
        if not isinstance(reference, (int, float)) or reference <= 0:
            raise ObservedDataError(f"baseline reference must be > 0, got {reference!r}")
        values = tuple(v / reference for v in series.values)
        return replace(series, values=values, normalization=RELATIVE_TO_BASELINE)
    if mode == RELATIVE_TO_PRIOR_YEAR:
        if not isinstance(reference, ObservedSeries):
            raise ObservedDataError("prior-year mode needs a reference ObservedSeries")
        prior = reference.as_mapping()
        values = []
        for date, value in zip(series.dates, series.values):
            try:
                match_date = date.replace(year=date.year - 1)
            except ValueError:
                raise ObservedDataError(
                    f"no prior-year date exists for {date.isoformat()}"
                ) from None
            if match_date not in prior:
                raise ObservedDataError(
                    f"prior-year series has no value for {match_date.isoformat()}"
                )
            ref = prior[match_date]
            if ref == 0:
                raise ObservedDataError(f"zero prior-year reference at {match_date}")
            values.append(value / ref)
        return replace(series, values=tuple(values), normalization=RELATIVE_TO_PRIOR_YEAR)
    raise ObservedDataError(f"unknown normalization mode {mode!r}")


def denormalize(
    series: ObservedSeries, reference: float | ObservedSeries
) -> ObservedSeries:
    """Invert normalize() given the same reference."""
    if series.normalization == RELATIVE_TO_BASELINE:
        values = tuple(v * reference for v in series.values)
        return replace(series, values=values, normalization=RAW)
    if series.normalization == RELATIVE_TO_PRIOR_YEAR:
        prior = reference.as_mapping()
        values = tuple(
            v * prior[d.replace(year=d.year - 1)]
            for d, v in zip(series.dates, series.values)
        )
        return replace(series, values=values, normalization=RAW)
    return replace(series, normalization=RAW)


def pearson(a: Sequence[float], b: Sequence[float]) -> float:
    """Sample Pearson correlation; needs length >= 3 and nonzero variances."""
    if len(a) != len(b):
        raise SeriesStatsError(f"length mismatch: {len(a)} vs {len(b)}")
    if len(a) < 3:
        raise SeriesStatsError(f"need at least 3 points, got {len(a)}")
    n = len(a)
    mean_a = sum(a) / n
    mean_b = sum(b) / n
    sxy = sxx = syy = 0.0
    for x, y in zip(a, b):
        dx, dy = x - mean_a, y - mean_b
        sxy += dx * dy
        sxx += dx * dx
        syy += dy * dy
    if sxx == 0.0 or syy == 0.0:
        raise SeriesStatsError("zero variance input")
    return sxy / math.sqrt(sxx * syy)


def rmse(a: Sequence[float], b: Sequence[float]) -> float:
    if len(a) != len(b):
        raise SeriesStatsError(f"length mismatch: {len(a)} vs {len(b)}")
    if not a:
        raise SeriesStatsError("need at least 1 point")
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)) / len(a))


@dataclass(frozen=True)
class ComparisonReport:
    """Comparison statistics over the date intersection of two series."""

    metric: str
    dates: tuple[dt.date, ...]
    rmse: float
    pearson: float | None  # None when fewer than 3 common dates or zero variance
    residuals: tuple[float, ...]  # simulated minus observed, per common date


def compare_series(simulated: ObservedSeries, observed: ObservedSeries) -> ComparisonReport:
    sim_map = simulated.as_mapping()
    obs_map = observed.as_mapping()
    common = sorted(set(sim_map) & set(obs_map))
    if not common:
        raise SeriesStatsError(
            f"no overlapping dates between {simulated.name!r} and {observed.name!r}"
        )
    sim_vals = [sim_map[d] for d in common]
    obs_vals = [obs_map[d] for d in common]
    corr: float | None
    try:
        corr = pearson(sim_vals, obs_vals)
    except SeriesStatsError:
        corr = None
    return ComparisonReport(
        metric=observed.name,
        dates=tuple(common),
        rmse=rmse(sim_vals, obs_vals),
        pearson=corr,
        residuals=tuple(s - o for s, o in zip(sim_vals, obs_vals)),
    )


def result_series(result: SimulationResult, series_name: str) -> ObservedSeries:
    """View one simulated series as an ObservedSeries for alignment."""
    return ObservedSeries(series_name, result.dates, result.series[series_name])


@dataclass(frozen=True)
class GridSpec:
    """Inclusive arithmetic grid ``minimum, minimum+step, ..., maximum``."""

    minimum: float
    maximum: float
    step: float

    def points(self) -> tuple[float, ...]:
        if self.step <= 0:
            raise SeriesStatsError("grid step must be positive")
        if self.maximum < self.minimum:
            raise SeriesStatsError("grid maximum must be >= minimum")
        count = int(math.floor((self.maximum - self.minimum) / self.step + 1e-9)) + 1
        # round away accumulated float error so planted values are hit exactly
        return tuple(round(self.minimum + k * self.step, 10) for k in range(count))


@dataclass(frozen=True)
class FitResult:
    """Grid-search outcome; ``best_scale`` minimises the loss (ties go to
    the smaller scale, grids being ascending)."""

    best_scale: float
    grid: tuple[float, ...]
    losses: tuple[float, ...]


def fit_transmission_scale(
    disease: DiseaseParams,
    mobility: MobilityBehaviorParams,
    restaurant: RestaurantParams,
    scenario: ScenarioSpec,
    observed: ObservedSeries,
    grid: GridSpec | Iterable[float],
    cfg: RunConfig,
    target_series: str = "daily_confirmed",
) -> FitResult:
    """Grid-search the transmission scale against an observed series.

    Loss is the RMSE between the simulated target series and the observed
    values over their date intersection.
    """
    points = grid.points() if isinstance(grid, GridSpec) else tuple(grid)
    if not points:
        raise SeriesStatsError("empty calibration grid")
    points = tuple(sorted(points))

    losses = []
    for scale in points:
        candidate = replace(disease, transmission_scale=scale)
        model = build_model(candidate, mobility, restaurant, scenario)
        result = run(model, cfg)
        report = compare_series(result_series(result, target_series), observed)
        losses.append(report.rmse)

    best_ix = min(range(len(points)), key=lambda i: (losses[i], points[i]))
    return FitResult(best_scale=points[best_ix], grid=points, losses=tuple(losses))
