import pytest

from npiflow.engine import (
    AuxiliaryDef,
    FlowDef,
    ModelDef,
    ModelValidationError,
    PERSONS_PER_DAY,
    Schedule,
    StockDef,
    auxiliary_order,
    parse_expression,
    require_valid,
    validate_model,
)
from npiflow.tokyo import default_model, preset


def _aux(name, text):
    return AuxiliaryDef(name, parse_expression(text))


def _flow(name, text, unit=PERSONS_PER_DAY):
    return FlowDef(name, parse_expression(text), unit)


def test_tokyo_model_is_clean():
    report = validate_model(default_model(preset("realistic")))
    assert report.ok
    assert str(report) == "model ok"


def test_cycle_between_two_auxiliaries():
    model = ModelDef(
        stocks=(),
        flows=(),
        auxiliaries=(_aux("a", "b"), _aux("b", "a")),
    )
    report = validate_model(model)
    cycle_issues = [i for i in report.issues if i.kind == "cycle"]
    assert len(cycle_issues) == 1
    assert "a" in cycle_issues[0].message and "b" in cycle_issues[0].message
    with pytest.raises(ModelValidationError):
        auxiliary_order(model)


def test_self_referencing_auxiliary_is_a_cycle():
    model = ModelDef(stocks=(), flows=(), auxiliaries=(_aux("a", "a + 1"),))
    assert any(i.kind == "cycle" for i in validate_model(model).issues)


def test_unknown_reference_is_reported():
    model = ModelDef(
        stocks=(StockDef("s", 1.0, outflows=("f",)),),
        flows=(_flow("f", "foo * s"),),
        auxiliaries=(),
    )
    issues = validate_model(model).issues
    assert any(i.kind == "unknown-reference" and "foo" in i.message for i in issues)


def test_flow_may_not_be_referenced():
    model = ModelDef(
        stocks=(StockDef("s", 1.0, outflows=("f",)),),
        flows=(_flow("f", "0.1 * s"), _flow("g", "f * 2")),
        auxiliaries=(),
    )
    issues = validate_model(model).issues
    assert any(i.kind == "flow-reference" for i in issues)


def test_duplicate_name_across_categories():
    model = ModelDef(
        stocks=(StockDef("x", 1.0),),
        flows=(),
        auxiliaries=(_aux("x", "1"),),
    )
    assert any(i.kind == "duplicate-name" for i in validate_model(model).issues)


def test_missing_flow_endpoint():
    model = ModelDef(
        stocks=(StockDef("s", 1.0, inflows=("nope",)),),
        flows=(),
        auxiliaries=(),
    )
    assert any(i.kind == "endpoint" for i in validate_model(model).issues)


def test_flow_unit_must_be_per_day():
    model = ModelDef(
        stocks=(StockDef("s", 1.0, outflows=("f",)),),
        flows=(_flow("f", "0.1 * s", unit="persons"),),
        auxiliaries=(),
    )
    assert any(i.kind == "unit" for i in validate_model(model).issues)


def test_non_finite_initial_value():
    model = ModelDef(stocks=(StockDef("s", float("inf")),), flows=(), auxiliaries=())
    assert any(i.kind == "non-finite" for i in validate_model(model).issues)


def test_require_valid_raises_with_report():
    model = ModelDef(stocks=(), flows=(), auxiliaries=(_aux("a", "missing"),))
    with pytest.raises(ModelValidationError) as exc:
        require_valid(model)
    assert not exc.value.report.ok


def test_auxiliary_order_respects_dependencies():
    model = ModelDef(
        stocks=(StockDef("s", 1.0),),
        flows=(),
        auxiliaries=(_aux("c", "b + 1"), _aux("b", "a * 2"), _aux("a", "s")),
        schedules={"u": Schedule(0.0)},
    )
    order = [a.name for a in auxiliary_order(model)]
    assert order.index("a") < order.index("b") < order.index("c")
