"""Stock-and-flow model definitions and structural validation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .expressions import Expr, references
from .schedule import Schedule

PERSONS = "persons"
PERSONS_PER_DAY = "persons/day"
PERSONS_PER_HOUR = "persons/hour"
DIMENSIONLESS = "dimensionless"


@dataclass(frozen=True)
class StockDef:
    """An accumulating state variable, changed only by its flows.

    ``inflows``/``outflows`` name FlowDefs of the same model. When
    ``non_negative`` is set the integrator clamps the stock at zero
    (and logs the event) instead of letting it go negative.
    """

    name: str
    initial: float
    inflows: tuple[str, ...] = ()
    outflows: tuple[str, ...] = ()
    non_negative: bool = True
    unit: str = PERSONS


@dataclass(frozen=True)
class FlowDef:
    """A rate moving quantity between stocks (or to/from a sink)."""

    name: str
    expression: Expr
    unit: str = PERSONS_PER_DAY


@dataclass(frozen=True)
class AuxiliaryDef:
    """An instantaneous derived quantity, recomputed every step."""

    name: str
    expression: Expr
    unit: str = DIMENSIONLESS


@dataclass(frozen=True)
class ModelDef:
    """Immutable bundle of stocks, flows, auxiliaries and schedule inputs."""

    stocks: tuple[StockDef, ...]
    flows: tuple[FlowDef, ...]
    auxiliaries: tuple[AuxiliaryDef, ...]
    schedules: Mapping[str, Schedule] = field(default_factory=dict)

    def stock_names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.stocks)

    def flow_names(self) -> tuple[str, ...]:
        return tuple(f.name for f in self.flows)

    def auxiliary_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.auxiliaries)

    def schedule_names(self) -> tuple[str, ...]:
        return tuple(self.schedules)

    def series_names(self) -> tuple[str, ...]:
        """All recordable names: stocks, flows, auxiliaries, then schedules."""
        return (
            self.stock_names()
            + self.flow_names()
            + self.auxiliary_names()
            + self.schedule_names()
        )


@dataclass(frozen=True)
class ValidationIssue:
    kind: str  # duplicate-name | unknown-reference | flow-reference | cycle | unit | endpoint | non-finite
    subject: str
    message: str

    def __str__(self) -> str:
        return f"[{self.kind}] {self.subject}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[ValidationIssue, ...]

    @property
    def ok(self) -> bool:
        return not self.issues

    def __str__(self) -> str:
        if self.ok:
            return "model ok"
        return "\n".join(str(i) for i in self.issues)


class ModelValidationError(Exception):
    """Raised when a model with validation defects is used for simulation."""

    def __init__(self, report: ValidationReport):
        super().__init__(str(report))
        self.report = report


def validate_model(model: ModelDef) -> ValidationReport:
    """Structural checks: unique names, resolvable references, acyclic
    auxiliaries, declared flow endpoints, per-day units on flows."""
    issues: list[ValidationIssue] = []

    names: dict[str, str] = {}
    for category, seq in (
        ("stock", model.stock_names()),
        ("flow", model.flow_names()),
        ("auxiliary", model.auxiliary_names()),
        ("schedule", model.schedule_names()),
    ):
        for name in seq:
            if name in names:
                issues.append(
                    ValidationIssue(
                        "duplicate-name",
                        name,
                        f"declared as both {names[name]} and {category}",
                    )
                )
            else:
                names[name] = category

    referencable = {
        n for n, cat in names.items() if cat in ("stock", "auxiliary", "schedule")
    }
    flow_names = set(model.flow_names())
    for entity in (*model.flows, *model.auxiliaries):
        for ref in set(references(entity.expression)):
            if ref in referencable:
                continue
            if ref in flow_names:
                issues.append(
                    ValidationIssue(
                        "flow-reference",
                        entity.name,
                        f"references flow {ref!r}; flows cannot be referenced, "
                        "only wired through stock inflows/outflows",
                    )
                )
            else:
                issues.append(
                    ValidationIssue(
                        "unknown-reference", entity.name, f"references undeclared {ref!r}"
                    )
                )

    for stock in model.stocks:
        for endpoint in (*stock.inflows, *stock.outflows):
            if endpoint not in flow_names:
                issues.append(
                    ValidationIssue(
                        "endpoint", stock.name, f"flow {endpoint!r} is not declared"
                    )
                )
        if not math.isfinite(stock.initial):
            issues.append(
                ValidationIssue("non-finite", stock.name, "initial value is not finite")
            )

    for flow in model.flows:
        if flow.unit != PERSONS_PER_DAY:
            issues.append(
                ValidationIssue(
                    "unit", flow.name, f"flows must be {PERSONS_PER_DAY}, got {flow.unit!r}"
                )
            )

    cycle = _find_auxiliary_cycle(model)
    if cycle:
        issues.append(
            ValidationIssue(
                "cycle",
                cycle[0],
                "auxiliaries form an algebraic loop: " + " -> ".join(cycle),
            )
        )

    return ValidationReport(tuple(issues))


def require_valid(model: ModelDef) -> None:
    report = validate_model(model)
    if not report.ok:
        raise ModelValidationError(report)


def auxiliary_order(model: ModelDef) -> tuple[AuxiliaryDef, ...]:
    """Auxiliaries sorted so that each one's dependencies precede it.

    Declaration order is kept wherever dependencies allow, so the result
    is deterministic; a dependency cycle raises ModelValidationError.
    """
    aux_by_name = {a.name: a for a in model.auxiliaries}
    deps = {
        a.name: {r for r in set(references(a.expression)) if r in aux_by_name}
        for a in model.auxiliaries
    }
    ordered: list[AuxiliaryDef] = []
    placed: set[str] = set()
    pending = list(aux_by_name)
    while pending:
        progressed = False
        remaining = []
        for name in pending:
            if deps[name] <= placed:
                ordered.append(aux_by_name[name])
                placed.add(name)
                progressed = True
            else:
                remaining.append(name)
        if not progressed:
            report = ValidationReport(
                (
                    ValidationIssue(
                        "cycle",
                        remaining[0],
                        "auxiliaries form an algebraic loop: " + ", ".join(remaining),
                    ),
                )
            )
            raise ModelValidationError(report)
        pending = remaining
    return tuple(ordered)


def _find_auxiliary_cycle(model: ModelDef) -> list[str] | None:
    aux_names = set(model.auxiliary_names())
    deps = {
        a.name: sorted(set(references(a.expression)) & aux_names)
        for a in model.auxiliaries
    }
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {name: WHITE for name in deps}
    stack: list[str] = []

    def visit(node: str) -> list[str] | None:
        colour[node] = GREY
        stack.append(node)
        for dep in deps[node]:
            if colour[dep] == GREY:
                return stack[stack.index(dep):] + [dep]
            if colour[dep] == WHITE:
                found = visit(dep)
                if found:
                    return found
        colour[node] = BLACK
        stack.pop()
        return None

    for name in deps:
        if colour[name] == WHITE:
            found = visit(name)
            if found:
                return found
    return None
