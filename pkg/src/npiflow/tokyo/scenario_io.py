"""Scenario documents: the JSON exchange format for intervention bundles.

Document shape (all field names are part of the contract):

    {
      "name": "my scenario",
      "start_date": "2020-03-01",
      "schedules": {
        "stay_at_home": [["2020-04-08", 1], ["2020-05-26", 0]],
        ...
      },
      "param_overrides": {"disease.transmission_scale": 1.3}
    }

Schedule keys are the eight scenario inputs; a missing key means a
constant 0 schedule, except ``school_closure_commute`` (mirrors
``school_closure_psych`` when omitted) and ``new_normal`` (falls back to
the mobility parameters' default latch). An entry dated on ``start_date``
sets the value from day 0, which is how "initially on" inputs are written.
"""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Mapping

from ..engine import Schedule
from .params import (
    SIM_START,
    DiseaseParams,
    MobilityBehaviorParams,
    RestaurantParams,
    date_to_day,
    day_to_date,
    overridable_params,
)
from .presets import SCENARIO_SCHEDULE_NAMES, ScenarioSpec


class ScenarioFormatError(ValueError):
    """A scenario document violates the documented format or invariants.

    ``path`` points at the offending field, e.g. ``schedules.stay_at_home[2]``;
    ``kind`` separates shape/type problems ("malformed") from contract
    violations in well-formed content ("invariant").
    """

    def __init__(self, path: str, message: str, kind: str = "malformed"):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.kind = kind


@dataclass(frozen=True)
class ScenarioDocument:
    """A scenario plus its parameter overrides and time origin."""

    spec: ScenarioSpec
    start: dt.date = SIM_START
    param_overrides: Mapping[str, float] = field(default_factory=dict)


def _parse_schedule(name: str, pairs: Any, start: dt.date) -> Schedule:
    where = f"schedules.{name}"
    if not isinstance(pairs, list):
        raise ScenarioFormatError(where, "expected a list of [date, value] pairs")
    breakpoints = []
    for i, pair in enumerate(pairs):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ScenarioFormatError(f"{where}[{i}]", "expected a [date, value] pair")
        raw_date, raw_value = pair
        try:
            day = date_to_day(dt.date.fromisoformat(str(raw_date)), start)
        except ValueError as exc:
            raise ScenarioFormatError(f"{where}[{i}]", str(exc)) from None
        if not isinstance(raw_value, (int, float)) or isinstance(raw_value, bool):
            raise ScenarioFormatError(f"{where}[{i}]", f"value must be a number, got {raw_value!r}")
        breakpoints.append((day, float(raw_value)))
    try:
        return Schedule(0.0, tuple(breakpoints))
    except ValueError as exc:
        raise ScenarioFormatError(where, str(exc), kind="invariant") from None


def scenario_from_dict(doc: Mapping[str, Any]) -> ScenarioDocument:
    """Parse and validate a scenario document."""
    if not isinstance(doc, Mapping):
        raise ScenarioFormatError("$", "scenario document must be an object")
    name = doc.get("name", "custom")
    if not isinstance(name, str):
        raise ScenarioFormatError("name", "must be a string")
    raw_start = doc.get("start_date", SIM_START.isoformat())
    try:
        start = dt.date.fromisoformat(str(raw_start))
    except ValueError:
        raise ScenarioFormatError("start_date", f"not an ISO date: {raw_start!r}") from None

    raw_schedules = doc.get("schedules", {})
    if not isinstance(raw_schedules, Mapping):
        raise ScenarioFormatError("schedules", "must be an object")
    unknown = set(raw_schedules) - set(SCENARIO_SCHEDULE_NAMES)
    if unknown:
        raise ScenarioFormatError(
            "schedules",
            f"unknown schedule name(s) {sorted(unknown)}; "
            f"valid names: {', '.join(SCENARIO_SCHEDULE_NAMES)}",
        )

    schedules: dict[str, Schedule | None] = {}
    for sched_name in SCENARIO_SCHEDULE_NAMES:
        if sched_name in raw_schedules:
            schedules[sched_name] = _parse_schedule(
                sched_name, raw_schedules[sched_name], start
            )
        elif sched_name == "new_normal":
            schedules[sched_name] = None  # resolved against mobility params
        else:
            schedules[sched_name] = Schedule(0.0)
    if "school_closure_commute" not in raw_schedules and "school_closure_psych" in raw_schedules:
        schedules["school_closure_commute"] = schedules["school_closure_psych"]

    overrides = doc.get("param_overrides", {})
    if not isinstance(overrides, Mapping):
        raise ScenarioFormatError("param_overrides", "must be an object")
    known = overridable_params()
    clean_overrides: dict[str, float] = {}
    for key, value in overrides.items():
        if key not in known:
            raise ScenarioFormatError(
                f"param_overrides.{key}",
                f"unknown parameter; overridable: {', '.join(sorted(known))}",
                kind="invariant",
            )
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ScenarioFormatError(f"param_overrides.{key}", "must be a number")
        clean_overrides[key] = float(value)

    try:
        spec = ScenarioSpec(name=name, **schedules)
    except ValueError as exc:
        raise ScenarioFormatError("schedules", str(exc), kind="invariant") from None
    return ScenarioDocument(spec=spec, start=start, param_overrides=clean_overrides)


def load_scenario(path: str | Path) -> ScenarioDocument:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError("$", f"not valid JSON: {exc}") from None
    return scenario_from_dict(doc)


def scenario_to_dict(document: ScenarioDocument) -> dict[str, Any]:
    """Serialise back to the documented JSON shape (inverse of parsing)."""
    schedules: dict[str, list[list[Any]]] = {}
    for sched_name, schedule in document.spec.schedules().items():
        pairs = [
            [day_to_date(day, document.start).isoformat(), value]
            for day, value in schedule.breakpoints
        ]
        # a non-zero default becomes a day-0 entry, unless one already exists
        if schedule.default != 0.0 and (
            not schedule.breakpoints or schedule.breakpoints[0][0] != 0
        ):
            pairs.insert(0, [document.start.isoformat(), schedule.default])
        schedules[sched_name] = pairs
    return {
        "name": document.spec.name,
        "start_date": document.start.isoformat(),
        "schedules": schedules,
        "param_overrides": dict(document.param_overrides),
    }


def save_scenario(document: ScenarioDocument, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(scenario_to_dict(document), indent=2) + "\n", encoding="utf-8"
    )


def apply_overrides(
    disease: DiseaseParams,
    mobility: MobilityBehaviorParams,
    restaurant: RestaurantParams,
    overrides: Mapping[str, float],
) -> tuple[DiseaseParams, MobilityBehaviorParams, RestaurantParams]:
    """Return new parameter sets with dotted overrides applied."""
    known = overridable_params()
    groups = {"disease": disease, "mobility": mobility, "restaurant": restaurant}
    pending: dict[str, dict[str, float]] = {g: {} for g in groups}
    for key, value in overrides.items():
        if key not in known:
            raise ScenarioFormatError(
                f"param_overrides.{key}",
                f"unknown parameter; overridable: {', '.join(sorted(known))}",
                kind="invariant",
            )
        group, field_name = known[key]
        pending[group][field_name] = float(value)
    return (
        replace(disease, **pending["disease"]),
        replace(mobility, **pending["mobility"]),
        replace(restaurant, **pending["restaurant"]),
    )
