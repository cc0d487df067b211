"""The integrated Tokyo disease / people-flow / restaurant model."""

from .build import EPIDEMIC_STOCKS, build_model, default_model
from .multipliers import (
    behavior_risk_multiplier,
    ewom_multiplier,
    infection_flow,
    people_flow_multiplier,
    visits_multiplier,
)
from .params import (
    CUSTOMER_POPULATION,
    DEFAULT_CARRIER_WEIGHTS,
    SIM_END,
    SIM_HORIZON_DAYS,
    SIM_START,
    TOKYO_POPULATION,
    DiseaseParams,
    MobilityBehaviorParams,
    RestaurantParams,
    date_to_day,
    dated_schedule,
    day_to_date,
    overridable_params,
)
from .presets import (
    PRESET_IDS,
    SCENARIO_SCHEDULE_NAMES,
    ScenarioSpec,
    UnknownPresetError,
    all_presets,
    preset,
)
from .scenario_io import (
    ScenarioDocument,
    ScenarioFormatError,
    apply_overrides,
    load_scenario,
    save_scenario,
    scenario_from_dict,
    scenario_to_dict,
)

__all__ = [
    "CUSTOMER_POPULATION",
    "DEFAULT_CARRIER_WEIGHTS",
    "DiseaseParams",
    "EPIDEMIC_STOCKS",
    "MobilityBehaviorParams",
    "PRESET_IDS",
    "RestaurantParams",
    "SCENARIO_SCHEDULE_NAMES",
    "SIM_END",
    "SIM_HORIZON_DAYS",
    "SIM_START",
    "ScenarioDocument",
    "ScenarioFormatError",
    "ScenarioSpec",
    "TOKYO_POPULATION",
    "UnknownPresetError",
    "all_presets",
    "apply_overrides",
    "behavior_risk_multiplier",
    "build_model",
    "date_to_day",
    "dated_schedule",
    "day_to_date",
    "default_model",
    "ewom_multiplier",
    "infection_flow",
    "load_scenario",
    "overridable_params",
    "people_flow_multiplier",
    "preset",
    "save_scenario",
    "scenario_from_dict",
    "scenario_to_dict",
    "visits_multiplier",
]
