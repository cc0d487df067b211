"""Assemble the integrated Tokyo model onto the simulation engine.

The model has three blocks wired per the published structure: disease
progression (susceptible through recovered/hospitalised compartments),
people flow and protective behaviour (which modulate transmission), and
restaurant demand (customer visits and eWOM mass, driven purely by the
intervention schedules - no arrow feeds disease state back into it).
"""

from __future__ import annotations

from ..engine import (
    DIMENSIONLESS,
    PERSONS_PER_HOUR,
    AuxiliaryDef,
    FlowDef,
    ModelDef,
    StockDef,
    parse_expression,
    require_valid,
)
from .params import DiseaseParams, MobilityBehaviorParams, RestaurantParams
from .presets import ScenarioSpec

# stocks whose sum is conserved over a run (every flow between them is
# wired to both endpoints; hospitalised/recovered are terminal sinks)
EPIDEMIC_STOCKS = (
    "susceptible",
    "infected",
    "apparent",
    "inapparent",
    "confirmed",
    "not_tested_positives",
    "hospitalised",
    "recovered_inapparent",
    "recovered_not_tested",
)

INITIAL_INFECTED = 149.0
INITIAL_APPARENT = 60.0
INITIAL_INAPPARENT = 664.0
INITIAL_CONFIRMED = 5.0
INITIAL_NOT_TESTED = 50.0


def _carrier_expression(weights) -> str:
    terms = []
    for stock, weight in weights.items():
        if weight == 0.0:
            continue
        terms.append(stock if weight == 1.0 else f"{weight!r}*{stock}")
    if not terms:
        return "0"
    return " + ".join(terms)


def build_model(
    disease: DiseaseParams,
    mobility: MobilityBehaviorParams,
    restaurant: RestaurantParams,
    scenario: ScenarioSpec,
) -> ModelDef:
    """Wire parameters and a scenario into a validated ModelDef."""
    d, m, r = disease, mobility, restaurant

    new_normal = scenario.new_normal if scenario.new_normal is not None else m.new_normal
    schedules = {
        "testing_policy": d.testing_policy,
        "temperature_effect": d.temperature_effect,
        "behaviour_guidance": m.behaviour_guidance,
        "short_term_consciousness": scenario.short_term_consciousness,
        "mid_term_consciousness": scenario.mid_term_consciousness,
        "long_term_consciousness": scenario.long_term_consciousness,
        "school_closure_psych": scenario.school_closure_psych,
        "school_closure_commute": scenario.school_closure_commute,
        "stay_at_home": scenario.stay_at_home,
        "focused_intervention": scenario.focused_intervention,
        "new_normal": new_normal,
    }

    stocks = (
        StockDef("susceptible", d.total_population, outflows=("infection",)),
        StockDef(
            "infected",
            INITIAL_INFECTED,
            inflows=("infection",),
            outflows=("apparent_infection", "inapparent_infection"),
        ),
        StockDef(
            "apparent",
            INITIAL_APPARENT,
            inflows=("apparent_infection",),
            outflows=("virus_testing", "not_tested"),
        ),
        StockDef(
            "inapparent",
            INITIAL_INAPPARENT,
            inflows=("inapparent_infection",),
            outflows=("inapparent_recovery",),
        ),
        StockDef(
            "confirmed",
            INITIAL_CONFIRMED,
            inflows=("virus_testing",),
            outflows=("hospitalisation",),
        ),
        StockDef(
            "not_tested_positives",
            INITIAL_NOT_TESTED,
            inflows=("not_tested",),
            outflows=("not_tested_recovery",),
        ),
        StockDef("hospitalised", 0.0, inflows=("hospitalisation",)),
        StockDef("recovered_inapparent", 0.0, inflows=("inapparent_recovery",)),
        StockDef("recovered_not_tested", 0.0, inflows=("not_tested_recovery",)),
        StockDef("customer_home", r.customer_population, inflows=("dining_return",), outflows=("dining_out",)),
        StockDef("customer_out", 0.0, inflows=("dining_out",), outflows=("dining_return",)),
    )

    # protective probability interpolates normal -> epidemic with guidance
    p_base = min(m.protect_prob_normal, m.protect_prob_epidemic)
    p_span = m.protect_prob_epidemic - p_base
    risk_kept = 1.0 - m.distancing_factor
    inapparent_ratio = 1.0 - d.apparent_ratio

    aux_exprs = {
        "susceptible_ratio": f"susceptible / {d.total_population!r}",
        "flow_mult": (
            f"max(1 - {m.coeff_school_commute!r}*school_closure_commute"
            f" - {m.coeff_stay_home!r}*stay_at_home"
            f" - {m.coeff_short_term!r}*short_term_consciousness"
            f" - {m.coeff_new_normal!r}*new_normal, 0)"
        ),
        "behavior_mult": (
            f"1 - ({p_base!r} + {p_span!r}*behaviour_guidance) * {risk_kept!r}"
        ),
        "people_flow": f"{m.baseline_people_flow!r} * flow_mult",
        "daily_confirmed": f"apparent * testing_policy / {d.confirmation_delay_days!r}",
        "visits_normalized": (
            f"1 - {r.visit_school!r}*school_closure_psych"
            f" - {r.visit_stay_home!r}*stay_at_home"
            f" - {r.visit_mid_term!r}*mid_term_consciousness"
            f" - {r.visit_focused!r}*focused_intervention"
            f" - {r.visit_long_term!r}*long_term_consciousness"
        ),
        "ewom_mass": (
            f"1 - {r.ewom_school!r}*school_closure_psych"
            f" - {r.ewom_long_term!r}*long_term_consciousness"
            f" - {r.ewom_stay_home!r}*stay_at_home"
            f" - {r.ewom_focused!r}*focused_intervention"
            f" - {r.ewom_mid_term!r}*mid_term_consciousness"
        ),
    }
    aux_units = {"people_flow": PERSONS_PER_HOUR}
    auxiliaries = tuple(
        AuxiliaryDef(name, parse_expression(text), aux_units.get(name, DIMENSIONLESS))
        for name, text in aux_exprs.items()
    )

    carriers = _carrier_expression(d.carrier_weights)
    flow_exprs = {
        "infection": (
            f"{d.reproduction_rate_daily!r} * {d.transmission_scale!r}"
            f" * temperature_effect * susceptible_ratio * flow_mult * behavior_mult"
            f" * ({carriers})"
        ),
        "apparent_infection": f"infected * {d.apparent_ratio!r} / {d.incubation_days!r}",
        "inapparent_infection": f"infected * {inapparent_ratio!r} / {d.incubation_days!r}",
        "virus_testing": f"apparent * testing_policy / {d.confirmation_delay_days!r}",
        "not_tested": f"apparent * (1 - testing_policy) / {d.confirmation_delay_days!r}",
        "inapparent_recovery": f"inapparent / {d.inapparent_clearance_days!r}",
        "not_tested_recovery": f"not_tested_positives / {d.symptomatic_resolution_days!r}",
        "hospitalisation": f"confirmed / {d.hospitalisation_delay_days!r}",
        "dining_out": f"{r.baseline_dining_out!r} * visits_normalized",
        "dining_return": f"customer_out / {r.dining_return_days!r}",
    }
    flows = tuple(
        FlowDef(name, parse_expression(text)) for name, text in flow_exprs.items()
    )

    model = ModelDef(stocks=stocks, flows=flows, auxiliaries=auxiliaries, schedules=schedules)
    require_valid(model)
    return model


def default_model(scenario: ScenarioSpec) -> ModelDef:
    """The Tokyo model with all-default parameters for a scenario."""
    return build_model(
        DiseaseParams(), MobilityBehaviorParams(), RestaurantParams(), scenario
    )
