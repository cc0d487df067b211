"""npiflow: deterministic stock-and-flow what-if simulation of epidemic
intervention policies, with the integrated Tokyo 2020 model built in."""

__version__ = "0.1.0"

from .engine import (
    ModelDef,
    RunConfig,
    Schedule,
    SimulationResult,
    parse_expression,
    run,
    validate_model,
)
from .tokyo import (
    DiseaseParams,
    MobilityBehaviorParams,
    RestaurantParams,
    ScenarioSpec,
    build_model,
    preset,
)

__all__ = [
    "DiseaseParams",
    "MobilityBehaviorParams",
    "ModelDef",
    "RestaurantParams",
    "RunConfig",
    "Schedule",
    "ScenarioSpec",
    "SimulationResult",
    "__version__",
    "build_model",
    "parse_expression",
    "preset",
    "run",
    "validate_model",
]
