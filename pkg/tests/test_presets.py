import datetime as dt

import pytest

from npiflow.engine import Schedule
from npiflow.tokyo import (
    PRESET_IDS,
    SCENARIO_SCHEDULE_NAMES,
    UnknownPresetError,
    all_presets,
    preset,
)

START = dt.date(2020, 3, 1)


def day(iso: str) -> int:
    """Independent calendar oracle for breakpoint day indices."""
    return (dt.date.fromisoformat(iso) - START).days


# Intervention timetables per scenario: (default, [(date, value), ...]).
# Shared rows (consciousness onset/offset, school closure, new-normal
# latch) are identical across all four columns.
def _expected(short_extra, stay_points):
    return {
        "short_term_consciousness": (0.0, [("2020-03-27", 1), ("2020-05-30", 0), *short_extra]),
        "mid_term_consciousness": (0.0, [("2020-03-27", 1), ("2020-05-30", 0)]),
        "long_term_consciousness": (0.0, [("2020-03-27", 1)]),
        "school_closure_psych": (1.0, [("2020-05-26", 0)]),
        "school_closure_commute": (1.0, [("2020-05-26", 0)]),
        "stay_at_home": (0.0, stay_points),
        "focused_intervention": (0.0, []),
        "new_normal": (0.0, [("2020-04-15", 1)]),
    }


EXPECTED = {
    "realistic": _expected(
        [("2020-07-05", 1), ("2020-09-15", 0)],
        [("2020-04-08", 1), ("2020-05-26", 0)],
    ),
    "second_emergency": _expected(
        [("2020-07-05", 1), ("2020-09-01", 0)],
        [("2020-04-08", 1), ("2020-05-26", 0), ("2020-07-19", 1), ("2020-09-01", 0)],
    ),
    "pre_emptive_shorter": _expected(
        [("2020-06-28", 1), ("2020-07-28", 0)],
        [("2020-04-08", 1), ("2020-05-26", 0), ("2020-06-28", 1), ("2020-07-28", 0)],
    ),
    "exhaustive": _expected(
        [("2020-07-03", 1), ("2020-09-01", 0)],
        [("2020-03-29", 1), ("2020-05-30", 0), ("2020-06-03", 1), ("2020-09-01", 0)],
    ),
}


def test_exactly_four_presets():
    assert set(all_presets()) == set(PRESET_IDS)
    assert len(PRESET_IDS) == 4


@pytest.mark.parametrize("preset_id", PRESET_IDS)
def test_full_timetable_transcription(preset_id):
    spec = preset(preset_id)
    schedules = spec.schedules()
    assert set(schedules) == set(SCENARIO_SCHEDULE_NAMES)
    for name, (default, dated) in EXPECTED[preset_id].items():
        expected = Schedule(default, tuple((day(d), float(v)) for d, v in dated))
        assert schedules[name] == expected, f"{preset_id}.{name}"


def test_spot_anchor_day_indices():
    assert preset("realistic").stay_at_home.breakpoints == ((38, 1.0), (86, 0.0))
    assert preset("pre_emptive_shorter").stay_at_home.breakpoints == (
        (38, 1.0), (86, 0.0), (119, 1.0), (149, 0.0),
    )
    assert preset("exhaustive").short_term_consciousness.breakpoints == (
        (26, 1.0), (90, 0.0), (124, 1.0), (184, 0.0),
    )
    assert preset("second_emergency").stay_at_home.breakpoints[-1] == (184, 0.0)


@pytest.mark.parametrize("preset_id", PRESET_IDS)
def test_all_values_binary(preset_id):
    for name, schedule in preset(preset_id).schedules().items():
        assert set(schedule.values()) <= {0.0, 1.0}, f"{preset_id}.{name}"


def test_breakpoints_inside_default_window():
    for preset_id in PRESET_IDS:
        for schedule in preset(preset_id).schedules().values():
            for bp_day, _ in schedule.breakpoints:
                assert 0 <= bp_day <= 213


def test_unknown_preset_error_lists_valid_ids():
    with pytest.raises(UnknownPresetError) as exc:
        preset("bogus")
    message = str(exc.value)
    for valid in PRESET_IDS:
        assert valid in message
