"""Parameter sets for the Tokyo disease / people-flow / restaurant model.

Numeric defaults are the model's published parametrisation; schedule-typed
defaults carry the dated step changes (day indices counted from the
2020-03-01 simulation start). Every scalar here can be overridden through
scenario files (``param_overrides``) or dataclasses.replace.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field, fields
from typing import Mapping

from ..engine import Schedule

SIM_START = dt.date(2020, 3, 1)
SIM_END = dt.date(2020, 9, 30)
SIM_HORIZON_DAYS = (SIM_END - SIM_START).days  # 213 -> 214 daily records

TOKYO_POPULATION = 1.40e7
CUSTOMER_POPULATION = 1.07e7  # residents aged 15-74

# stock-name -> contribution to the carrier pool driving new infections;
# symptomatic compartments are assumed isolated (at home or hospitalised)
DEFAULT_CARRIER_WEIGHTS: dict[str, float] = {
    "infected": 1.0,
    "inapparent": 1.0,
    "apparent": 0.0,
    "not_tested_positives": 0.0,
    "confirmed": 0.0,
}


def date_to_day(date: dt.date, start: dt.date = SIM_START) -> int:
    """Whole days elapsed since ``start``; the start itself maps to 0."""
    delta = (date - start).days
    if delta < 0:
        raise ValueError(f"{date.isoformat()} is before the start {start.isoformat()}")
    return delta


def day_to_date(day: int, start: dt.date = SIM_START) -> dt.date:
    return start + dt.timedelta(days=day)


def dated_schedule(default: float, *changes: tuple[str, float],
                   start: dt.date = SIM_START) -> Schedule:
    """Build a Schedule from (ISO date, value) pairs relative to ``start``."""
    breakpoints = tuple(
        (date_to_day(dt.date.fromisoformat(day), start), float(value))
        for day, value in changes
    )
    return Schedule(default, breakpoints)


@dataclass(frozen=True)
class DiseaseParams:
    """Transmission and progression parameters.

    ``reproduction_rate_daily`` is the per-occasion reproduction number
    (2.9) expressed per day; ``transmission_scale`` maps that nominal rate
    onto observed case dynamics and is the one calibrated factor. The
    default of 1.2 is a reference calibration under which the preset
    scenarios reproduce the qualitative second-wave behaviour (resurgence
    after an early lift); at 1.0 the post-lift regime sits just below the
    epidemic growth threshold.
    """

    total_population: float = TOKYO_POPULATION
    reproduction_rate_daily: float = 0.207
    r0_per_occasion: float = 2.9
    apparent_ratio: float = 0.375
    incubation_days: float = 5.0
    inapparent_clearance_days: float = 8.0
    symptomatic_resolution_days: float = 8.0
    confirmation_delay_days: float = 2.0
    hospitalisation_delay_days: float = 1.0
    transmission_scale: float = 1.2
    testing_policy: Schedule = field(
        default_factory=lambda: dated_schedule(0.5, ("2020-05-10", 1.0))
    )
    temperature_effect: Schedule = field(
        default_factory=lambda: dated_schedule(
            1.0,
            ("2020-05-15", 1.2),
            ("2020-06-15", 1.6),
            ("2020-07-15", 1.1),
            ("2020-09-15", 1.6),
        )
    )
    carrier_weights: Mapping[str, float] = field(
        default_factory=lambda: dict(DEFAULT_CARRIER_WEIGHTS)
    )

    def __post_init__(self):
        if not 0.0 <= self.apparent_ratio <= 1.0:
            raise ValueError("apparent_ratio must lie in [0, 1]")
        for name in (
            "incubation_days",
            "inapparent_clearance_days",
            "symptomatic_resolution_days",
            "confirmation_delay_days",
            "hospitalisation_delay_days",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.transmission_scale <= 0:
            raise ValueError("transmission_scale must be positive")


@dataclass(frozen=True)
class MobilityBehaviorParams:
    """People flow and protective-behaviour parameters.

    Flow coefficients are the fractional reductions of crowded-place
    people flow per active input; their sum stays <= 1 so the multiplier
    cannot go negative for binary inputs.
    """

    baseline_people_flow: float = 250_000.0  # persons/hour at the reference node
    coeff_school_commute: float = 0.2
    coeff_stay_home: float = 0.1
    coeff_short_term: float = 0.1
    coeff_new_normal: float = 0.4
    distancing_factor: float = 0.5
    protect_prob_epidemic: float = 0.6
    protect_prob_normal: float = 0.3
    behaviour_guidance: Schedule = field(
        default_factory=lambda: dated_schedule(0.0, ("2020-04-15", 1.0))
    )
    # irreversible shift to remote work etc.; same onset as the guidance
    new_normal: Schedule = field(
        default_factory=lambda: dated_schedule(0.0, ("2020-04-15", 1.0))
    )

    def __post_init__(self):
        coeffs = (
            self.coeff_school_commute,
            self.coeff_stay_home,
            self.coeff_short_term,
            self.coeff_new_normal,
        )
        if any(not 0.0 <= c <= 1.0 for c in coeffs):
            raise ValueError("flow coefficients must lie in [0, 1]")
        if sum(coeffs) > 1.0 + 1e-12:
            raise ValueError("flow coefficients must sum to at most 1")
        for name in ("distancing_factor", "protect_prob_epidemic", "protect_prob_normal"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")


@dataclass(frozen=True)
class RestaurantParams:
    """Dining-out demand and eWOM parameters.

    ``baseline_dining_out`` defaults to 10% of the customer population per
    day; reported visit series are normalised to the no-intervention
    baseline, so the absolute value cancels out of every output.
    """

    customer_population: float = CUSTOMER_POPULATION
    baseline_dining_out: float | None = None  # persons/day, resolved below
    dining_return_days: float = 1.0
    visit_school: float = 0.2
    visit_stay_home: float = 0.1
    visit_mid_term: float = 0.1
    visit_focused: float = 0.1
    visit_long_term: float = 0.3
    ewom_school: float = 0.2
    ewom_long_term: float = 0.2
    ewom_stay_home: float = 0.1
    ewom_focused: float = 0.1
    ewom_mid_term: float = 0.1

    def __post_init__(self):
        if self.baseline_dining_out is None:
            object.__setattr__(self, "baseline_dining_out", 0.1 * self.customer_population)
        if self.baseline_dining_out <= 0:
            raise ValueError("baseline_dining_out must be positive")
        visit_sum = (
            self.visit_school
            + self.visit_stay_home
            + self.visit_mid_term
            + self.visit_focused
            + self.visit_long_term
        )
        ewom_sum = (
            self.ewom_school
            + self.ewom_long_term
            + self.ewom_stay_home
            + self.ewom_focused
            + self.ewom_mid_term
        )
        if visit_sum > 1.0 + 1e-12 or ewom_sum > 1.0 + 1e-12:
            raise ValueError("visit/eWOM coefficient sums must stay at most 1")


PARAM_GROUPS = {
    "disease": DiseaseParams,
    "mobility": MobilityBehaviorParams,
    "restaurant": RestaurantParams,
}


def overridable_params() -> dict[str, tuple[str, str]]:
    """Dotted override name -> (group, field) for every numeric scalar."""
    table: dict[str, tuple[str, str]] = {}
    for group, cls in PARAM_GROUPS.items():
        for f in fields(cls):
            if f.type in ("float", "int", "float | None"):
                table[f"{group}.{f.name}"] = (group, f.name)
    return table
