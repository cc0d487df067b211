import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from npiflow.engine import Schedule, eval_schedule


class TestStepLookup:
    def test_before_breakpoint_returns_default(self):
        s = Schedule(0.0, ((26, 1.0),))
        assert eval_schedule(s, 25.5) == 0.0

    def test_right_inclusive_at_breakpoint(self):
        s = Schedule(0.0, ((26, 1.0),))
        assert eval_schedule(s, 26) == 1.0

    def test_held_after_last_breakpoint(self):
        s = Schedule(0.0, ((26, 1.0),))
        assert eval_schedule(s, 200) == 1.0

    def test_one_ulp_before_breakpoint_returns_old_value(self):
        s = Schedule(0.0, ((26, 1.0),))
        assert eval_schedule(s, math.nextafter(26.0, 0.0)) == 0.0

    def test_no_breakpoints(self):
        assert eval_schedule(Schedule(0.5), 100.0) == 0.5

    def test_negative_day_rejected(self):
        with pytest.raises(ValueError):
            eval_schedule(Schedule(0.0), -1.0)

    def test_breakpoints_must_increase(self):
        with pytest.raises(ValueError, match="strictly increasing"):
            Schedule(0.0, ((5, 1.0), (5, 0.0)))
        with pytest.raises(ValueError, match="strictly increasing"):
            Schedule(0.0, ((7, 1.0), (3, 0.0)))

    def test_values_lists_default_and_breakpoints(self):
        s = Schedule(1.0, ((86, 0.0),))
        assert s.values() == (1.0, 0.0)


schedule_strategy = st.builds(
    Schedule,
    default=st.floats(-10, 10, allow_nan=False),
    breakpoints=st.lists(
        st.tuples(st.integers(0, 400), st.floats(-10, 10, allow_nan=False)),
        max_size=8,
        unique_by=lambda bp: bp[0],
    ).map(lambda bps: tuple(sorted(bps))),
)


@given(schedule=schedule_strategy, day=st.floats(0, 500, allow_nan=False))
def test_lookup_matches_linear_scan_oracle(schedule, day):
    # independent oracle: walk the breakpoints in order
    expected = schedule.default
    for bp_day, bp_value in schedule.breakpoints:
        if day >= bp_day:
            expected = bp_value
        else:
            break
    assert eval_schedule(schedule, day) == expected


@given(schedule=schedule_strategy, day=st.floats(0, 500, allow_nan=False))
def test_value_always_from_declared_set(schedule, day):
    assert eval_schedule(schedule, day) in schedule.values()
