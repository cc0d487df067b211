"""Fixed-step explicit Euler integration of a validated model."""

from __future__ import annotations

import datetime as dt
import logging
import math
from dataclasses import dataclass, field

from .expressions import EvaluationError, eval_expression
from .model import AuxiliaryDef, ModelDef, auxiliary_order, require_valid

log = logging.getLogger(__name__)


class SimulationError(Exception):
    """Numerical failure during a run; names the offending entity and time."""


@dataclass(frozen=True)
class RunConfig:
    """Window and step size for a run.

    ``dt`` must divide one day evenly; values are recorded once per whole
    day regardless of dt, so a run always yields ``horizon_days + 1``
    records (the initial state included).
    """

    start: dt.date
    horizon_days: int
    dt: float = 1.0

    def __post_init__(self):
        if self.horizon_days < 1:
            raise ValueError("horizon_days must be >= 1")
        if not 0.0 < self.dt <= 1.0:
            raise ValueError("dt must satisfy 0 < dt <= 1")
        steps = round(1.0 / self.dt)
        if abs(steps * self.dt - 1.0) > 1e-9:
            raise ValueError(f"dt={self.dt} does not divide one day evenly")

    @property
    def steps_per_day(self) -> int:
        return round(1.0 / self.dt)


@dataclass
class SimState:
    """Mutable per-run state: current time in days and stock values."""

    time: float
    stocks: dict[str, float]

    def copy(self) -> "SimState":
        return SimState(self.time, dict(self.stocks))


@dataclass(frozen=True)
class ClampEvent:
    time: float
    stock: str
    unclamped: float  # the negative value the stock would have reached


@dataclass(frozen=True)
class SimulationResult:
    """Per-day table of every stock, flow, auxiliary and schedule value."""

    dates: tuple[dt.date, ...]
    series: dict[str, tuple[float, ...]]
    clamp_events: tuple[ClampEvent, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.dates)


def initial_state(model: ModelDef) -> SimState:
    return SimState(0.0, {s.name: float(s.initial) for s in model.stocks})


def _evaluate(
    model: ModelDef,
    state: SimState,
    order: tuple[AuxiliaryDef, ...],
) -> dict[str, float]:
    """Bind schedules and stocks, then auxiliaries (in dependency order),
    then flows; every value is checked finite."""
    env: dict[str, float] = {}
    for name, schedule in model.schedules.items():
        env[name] = schedule.value_at(state.time)
    env.update(state.stocks)
    for entity in (*order, *model.flows):
        try:
            value = eval_expression(entity.expression, env)
        except EvaluationError as exc:
            raise SimulationError(
                f"evaluating {entity.name!r} at t={state.time}: {exc}"
            ) from exc
        if not math.isfinite(value):
            raise SimulationError(
                f"non-finite value for {entity.name!r} at t={state.time}"
            )
        env[entity.name] = value
    return env


def _apply_step(
    model: ModelDef,
    state: SimState,
    env: dict[str, float],
    step_dt: float,
    clamp_log: list[ClampEvent] | None = None,
) -> None:
    for stock in model.stocks:
        net = sum(env[f] for f in stock.inflows) - sum(env[f] for f in stock.outflows)
        value = state.stocks[stock.name] + net * step_dt
        if stock.non_negative and value < 0.0:
            event = ClampEvent(state.time, stock.name, value)
            if clamp_log is not None:
                clamp_log.append(event)
            log.debug("clamped %s at t=%s (would be %s)", stock.name, state.time, value)
            value = 0.0
        if not math.isfinite(value):
            raise SimulationError(
                f"non-finite value for stock {stock.name!r} at t={state.time}"
            )
        state.stocks[stock.name] = value


def step(model: ModelDef, state: SimState, step_dt: float) -> SimState:
    """Advance a copy of ``state`` by one Euler step of ``step_dt`` days."""
    require_valid(model)
    order = auxiliary_order(model)
    nxt = state.copy()
    env = _evaluate(model, nxt, order)
    _apply_step(model, nxt, env, step_dt)
    nxt.time = state.time + step_dt
    return nxt


def run(model: ModelDef, cfg: RunConfig) -> SimulationResult:
    """Simulate the whole window and record daily values.

    The t=0 record reflects the initial state; repeated calls with the
    same inputs are bit-identical.
    """
    require_valid(model)
    order = auxiliary_order(model)
    state = initial_state(model)

    names = model.series_names()
    columns: dict[str, list[float]] = {name: [] for name in names}
    clamp_log: list[ClampEvent] = []

    def record(env: dict[str, float]) -> None:
        for name in names:
            columns[name].append(env[name])

    steps_per_day = cfg.steps_per_day
    for day in range(cfg.horizon_days):
        for k in range(steps_per_day):
            state.time = day + k * cfg.dt
            try:
                env = _evaluate(model, state, order)
            except SimulationError as exc:
                raise SimulationError(f"day {day}: {exc}") from exc
            if k == 0:
                record(env)
            _apply_step(model, state, env, cfg.dt, clamp_log)
    state.time = float(cfg.horizon_days)
    env = _evaluate(model, state, order)
    record(env)

    dates = tuple(cfg.start + dt.timedelta(days=d) for d in range(cfg.horizon_days + 1))
    series = {name: tuple(values) for name, values in columns.items()}
    return SimulationResult(dates=dates, series=series, clamp_events=tuple(clamp_log))
