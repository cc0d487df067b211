import datetime as dt
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from npiflow.engine import (
    AuxiliaryDef,
    FlowDef,
    ModelDef,
    RunConfig,
    Schedule,
    SimulationError,
    StockDef,
    initial_state,
    parse_expression,
    run,
    step,
)

START = dt.date(2020, 3, 1)


def decay_model(rate=0.1, initial=100.0):
    return ModelDef(
        stocks=(StockDef("s", initial, outflows=("loss",)),),
        flows=(FlowDef("loss", parse_expression(f"{rate!r} * s")),),
        auxiliaries=(),
    )


def euler_decay_oracle(initial, rate, dt_days, days):
    """Independent step loop: what explicit Euler must produce."""
    value = initial
    steps = round(days / dt_days)
    for _ in range(steps):
        value = value + (-rate * value) * dt_days
    return value


class TestStep:
    def test_single_step(self):
        model = decay_model()
        state = step(model, initial_state(model), 1.0)
        assert state.stocks["s"] == 90.0
        assert state.time == 1.0

    def test_two_steps(self):
        model = decay_model()
        state = step(model, step(model, initial_state(model), 1.0), 1.0)
        assert state.stocks["s"] == 81.0

    def test_half_steps(self):
        model = decay_model()
        state = step(model, step(model, initial_state(model), 0.5), 0.5)
        assert state.stocks["s"] == pytest.approx(90.25, abs=1e-12)

    def test_step_does_not_mutate_input(self):
        model = decay_model()
        state = initial_state(model)
        step(model, state, 1.0)
        assert state.stocks["s"] == 100.0 and state.time == 0.0


class TestRun:
    def test_record_count_includes_initial_state(self):
        result = run(decay_model(), RunConfig(START, horizon_days=2))
        assert len(result.dates) == 3
        assert result.dates[0] == START
        assert result.series["s"][0] == 100.0

    def test_matches_independent_step_loop_oracle(self):
        result = run(decay_model(), RunConfig(START, horizon_days=10))
        expected = euler_decay_oracle(100.0, 0.1, 1.0, 10)
        assert result.series["s"][10] == pytest.approx(expected, rel=1e-12)
        # and the closed form for the same discretisation
        assert result.series["s"][10] == pytest.approx(100.0 * 0.9**10, rel=1e-9)

    def test_small_dt_approaches_continuous_decay(self):
        result = run(decay_model(), RunConfig(START, horizon_days=10, dt=0.25))
        continuous = 100.0 * math.exp(-0.1 * 10)
        assert result.series["s"][10] == pytest.approx(continuous, rel=0.02)

    def test_refining_dt_reduces_discretisation_error(self):
        continuous = 100.0 * math.exp(-0.1 * 10)
        coarse = run(decay_model(), RunConfig(START, horizon_days=10, dt=1.0))
        fine = run(decay_model(), RunConfig(START, horizon_days=10, dt=0.25))
        err_coarse = abs(coarse.series["s"][10] - continuous)
        err_fine = abs(fine.series["s"][10] - continuous)
        assert err_fine < err_coarse

    def test_sub_day_steps_recorded_once_per_day(self):
        result = run(decay_model(), RunConfig(START, horizon_days=5, dt=0.5))
        assert len(result.dates) == 6

    def test_repeated_runs_bit_identical(self):
        cfg = RunConfig(START, horizon_days=50, dt=0.5)
        a = run(decay_model(), cfg)
        b = run(decay_model(), cfg)
        assert a.series == b.series and a.dates == b.dates

    def test_schedule_values_are_recorded(self):
        model = ModelDef(
            stocks=(StockDef("s", 1.0),),
            flows=(),
            auxiliaries=(),
            schedules={"u": Schedule(0.0, ((2, 1.0),))},
        )
        result = run(model, RunConfig(START, horizon_days=4))
        assert result.series["u"] == (0.0, 0.0, 1.0, 1.0, 1.0)


class TestClamping:
    def test_overdraining_stock_stops_exactly_at_zero(self):
        model = ModelDef(
            stocks=(StockDef("s", 10.0, outflows=("drain",)),),
            flows=(FlowDef("drain", parse_expression("12")),),
            auxiliaries=(),
        )
        result = run(model, RunConfig(START, horizon_days=3))
        assert result.series["s"] == (10.0, 0.0, 0.0, 0.0)
        assert result.clamp_events
        assert result.clamp_events[0].stock == "s"
        assert result.clamp_events[0].unclamped == -2.0

    def test_unclamped_stock_may_go_negative(self):
        model = ModelDef(
            stocks=(StockDef("s", 10.0, outflows=("drain",), non_negative=False),),
            flows=(FlowDef("drain", parse_expression("12")),),
            auxiliaries=(),
        )
        result = run(model, RunConfig(START, horizon_days=1))
        assert result.series["s"][1] == -2.0
        assert not result.clamp_events


class TestErrors:
    def test_non_finite_flow_names_entity_and_day(self):
        model = ModelDef(
            stocks=(StockDef("s", 1e308, outflows=("blowup",)),),
            flows=(FlowDef("blowup", parse_expression("s * -10")),),
            auxiliaries=(),
        )
        with pytest.raises(SimulationError, match=r"day \d+.*'blowup'"):
            run(model, RunConfig(START, horizon_days=10))

    def test_non_finite_stock_names_entity(self):
        model = ModelDef(
            stocks=(StockDef("s", 1e308, inflows=("feed",), non_negative=False),),
            flows=(FlowDef("feed", parse_expression("1.7e308")),),
            auxiliaries=(),
        )
        with pytest.raises(SimulationError, match="stock 's'"):
            run(model, RunConfig(START, horizon_days=10))

    def test_division_by_zero_names_entity(self):
        model = ModelDef(
            stocks=(StockDef("s", 1.0),),
            flows=(),
            auxiliaries=(AuxiliaryDef("bad", parse_expression("1 / u")),),
            schedules={"u": Schedule(1.0, ((3, 0.0),))},
        )
        with pytest.raises(SimulationError, match="'bad'"):
            run(model, RunConfig(START, horizon_days=10))

    def test_run_config_invariants(self):
        with pytest.raises(ValueError):
            RunConfig(START, horizon_days=0)
        with pytest.raises(ValueError):
            RunConfig(START, horizon_days=10, dt=0.3)
        with pytest.raises(ValueError):
            RunConfig(START, horizon_days=10, dt=1.5)
        assert RunConfig(START, horizon_days=10, dt=0.2).steps_per_day == 5


def test_auxiliary_declaration_order_is_irrelevant():
    stocks = (StockDef("s", 100.0, outflows=("out",)),)
    flows = (FlowDef("out", parse_expression("rate * s")),)
    forward = (
        AuxiliaryDef("base", parse_expression("0.05")),
        AuxiliaryDef("rate", parse_expression("base * 2")),
    )
    cfg = RunConfig(START, horizon_days=20)
    a = run(ModelDef(stocks, flows, forward), cfg)
    b = run(ModelDef(stocks, flows, tuple(reversed(forward))), cfg)
    assert a.series == b.series


@settings(max_examples=30, deadline=None)
@given(
    rate=st.floats(0.01, 0.5),
    initial=st.floats(1.0, 1e6),
    horizon=st.integers(1, 40),
    dt_days=st.sampled_from([1.0, 0.5, 0.25, 0.2]),
)
def test_linear_decay_matches_closed_form(rate, initial, horizon, dt_days):
    # Euler on ds/dt = -r*s equals s0 * (1 - r*dt)^(t/dt) exactly
    result = run(decay_model(rate, initial), RunConfig(START, horizon, dt_days))
    steps = round(horizon / dt_days)
    expected = initial * (1.0 - rate * dt_days) ** steps
    assert result.series["s"][horizon] == pytest.approx(expected, rel=1e-9)
