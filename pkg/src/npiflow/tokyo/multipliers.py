"""Closed-form intervention multipliers and the infection rate rule.

These are the same formulas the built model evaluates; keeping them as
plain functions gives an inspection surface (and a bitwise cross-check,
since argument order matches the generated expressions exactly).
"""

from __future__ import annotations

from .params import DiseaseParams


def people_flow_multiplier(
    school_commute: float,
    stay_home: float,
    short_term: float,
    new_normal: float,
    *,
    c_school: float = 0.2,
    c_stay: float = 0.1,
    c_short: float = 0.1,
    c_new_normal: float = 0.4,
) -> float:
    """Fraction of baseline people flow left under the active inputs."""
    raw = (
        1.0
        - c_school * school_commute
        - c_stay * stay_home
        - c_short * short_term
        - c_new_normal * new_normal
    )
    return max(raw, 0.0)


def behavior_risk_multiplier(
    protect_prob: float,
    guidance: float,
    distancing_factor: float,
    *,
    protect_prob_normal: float = 0.3,
) -> float:
    """Transmission-risk factor from individual protective behaviour.

    The effective protective probability interpolates from the normal-
    condition probability to ``protect_prob`` as guidance goes 0 to 1.
    The normal-condition probability is capped at ``protect_prob`` so that
    a population that never protects (protect_prob 0) yields exactly 1.
    """
    base = min(protect_prob_normal, protect_prob)
    effective = base + (protect_prob - base) * guidance
    return 1.0 - effective * (1.0 - distancing_factor)


def visits_multiplier(
    school_psych: float,
    stay_home: float,
    mid_term: float,
    focused: float,
    long_term: float,
    *,
    c_school: float = 0.2,
    c_stay: float = 0.1,
    c_mid: float = 0.1,
    c_focused: float = 0.1,
    c_long: float = 0.3,
) -> float:
    """Fraction of baseline dining-out demand left under the active inputs."""
    return (
        1.0
        - c_school * school_psych
        - c_stay * stay_home
        - c_mid * mid_term
        - c_focused * focused
        - c_long * long_term
    )


def ewom_multiplier(
    school_psych: float,
    long_term: float,
    stay_home: float,
    focused: float,
    mid_term: float,
    *,
    c_school: float = 0.2,
    c_long: float = 0.2,
    c_stay: float = 0.1,
    c_focused: float = 0.1,
    c_mid: float = 0.1,
) -> float:
    """Relative daily eWOM mass under the active inputs."""
    return (
        1.0
        - c_school * school_psych
        - c_long * long_term
        - c_stay * stay_home
        - c_focused * focused
        - c_mid * mid_term
    )


def infection_flow(
    carriers: float,
    susceptible_ratio: float,
    temperature: float,
    flow_mult: float,
    behavior_mult: float,
    params: DiseaseParams,
) -> float:
    """New infections per day: the daily reproduction rate scaled by every
    mitigating factor, applied to the weighted carrier pool."""
    return (
        params.reproduction_rate_daily
        * params.transmission_scale
        * temperature
        * susceptible_ratio
        * flow_mult
        * behavior_mult
        * carriers
    )
