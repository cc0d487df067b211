"""Generic stock-and-flow simulation core."""

from .expressions import (
    BinaryOp,
    Call,
    Const,
    EvaluationError,
    Expr,
    ExpressionError,
    ExpressionSyntaxError,
    Ref,
    eval_expression,
    parse_expression,
    references,
)
from .model import (
    DIMENSIONLESS,
    PERSONS,
    PERSONS_PER_DAY,
    PERSONS_PER_HOUR,
    AuxiliaryDef,
    FlowDef,
    ModelDef,
    ModelValidationError,
    StockDef,
    ValidationIssue,
    ValidationReport,
    auxiliary_order,
    require_valid,
    validate_model,
)
from .schedule import Schedule, eval_schedule
from .simulate import (
    ClampEvent,
    RunConfig,
    SimState,
    SimulationError,
    SimulationResult,
    initial_state,
    run,
    step,
)

__all__ = [
    "AuxiliaryDef",
    "BinaryOp",
    "Call",
    "ClampEvent",
    "Const",
    "DIMENSIONLESS",
    "EvaluationError",
    "Expr",
    "ExpressionError",
    "ExpressionSyntaxError",
    "FlowDef",
    "ModelDef",
    "ModelValidationError",
    "PERSONS",
    "PERSONS_PER_DAY",
    "PERSONS_PER_HOUR",
    "Ref",
    "RunConfig",
    "Schedule",
    "SimState",
    "SimulationError",
    "SimulationResult",
    "StockDef",
    "ValidationIssue",
    "ValidationReport",
    "auxiliary_order",
    "eval_expression",
    "eval_schedule",
    "initial_state",
    "parse_expression",
    "references",
    "require_valid",
    "run",
    "step",
    "validate_model",
]
