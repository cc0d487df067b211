"""Scenario bundles: the four built-in intervention presets.

Each preset is a dated transcription of one intervention timetable:

* ``realistic`` - the 2020 course of events: one stay-at-home request
  (08 Apr - 26 May), second-wave countermeasures limited to renewed
  short-term consciousness.
* ``second_emergency`` - adds a second stay-at-home request
  (19 Jul - 01 Sep) against the second wave.
* ``pre_emptive_shorter`` - a pre-emptive one-month request
  (28 Jun - 28 Jul) issued before the second wave peaks.
* ``exhaustive`` - near-continuous requests (29 Mar - 30 May and
  03 Jun - 01 Sep).

All schedule values are binary; the school-closure commuting input mirrors
its psychological twin, the focused intervention defaults to off, and the
new-normal lifestyle shift latches on 15 Apr 2020 and never reverts.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from ..engine import Schedule
from .params import dated_schedule

PRESET_IDS = ("realistic", "second_emergency", "pre_emptive_shorter", "exhaustive")

SCENARIO_SCHEDULE_NAMES = (
    "short_term_consciousness",
    "mid_term_consciousness",
    "long_term_consciousness",
    "school_closure_psych",
    "school_closure_commute",
    "stay_at_home",
    "focused_intervention",
    "new_normal",
)


class UnknownPresetError(KeyError):
    def __init__(self, name: str):
        super().__init__(
            f"unknown preset {name!r}; valid presets: {', '.join(PRESET_IDS)}"
        )
        self.name = name


@dataclass(frozen=True)
class ScenarioSpec:
    """Named bundle of binary intervention schedules.

    ``new_normal`` may be None, in which case the model builder falls back
    to the mobility parameters' default latch.
    """

    name: str
    short_term_consciousness: Schedule
    mid_term_consciousness: Schedule
    long_term_consciousness: Schedule
    school_closure_psych: Schedule
    school_closure_commute: Schedule
    stay_at_home: Schedule
    focused_intervention: Schedule
    new_normal: Schedule | None = None

    def __post_init__(self):
        for field_name, schedule in self.schedules().items():
            for value in schedule.values():
                if value not in (0.0, 1.0):
                    raise ValueError(
                        f"scenario schedule {field_name!r} must be binary, got {value}"
                    )
            if schedule.breakpoints and schedule.breakpoints[0][0] < 0:
                raise ValueError(f"{field_name}: negative breakpoint day")

    def schedules(self) -> dict[str, Schedule]:
        """The present schedules by name (omits an unset new_normal)."""
        out: dict[str, Schedule] = {}
        for f in fields(self):
            if f.name == "name":
                continue
            value = getattr(self, f.name)
            if value is not None:
                out[f.name] = value
        return out


# shared across all four presets
_SHORT_OFF_MAY = ("2020-03-27", 1.0), ("2020-05-30", 0.0)
_MID_TERM = dated_schedule(0.0, ("2020-03-27", 1.0), ("2020-05-30", 0.0))
_LONG_TERM = dated_schedule(0.0, ("2020-03-27", 1.0))
_SCHOOL_CLOSURE = dated_schedule(1.0, ("2020-05-26", 0.0))
_FOCUSED_OFF = Schedule(0.0)
_NEW_NORMAL_LATCH = dated_schedule(0.0, ("2020-04-15", 1.0))


def _scenario(name: str, short_term: Schedule, stay_at_home: Schedule) -> ScenarioSpec:
    return ScenarioSpec(
        name=name,
        short_term_consciousness=short_term,
        mid_term_consciousness=_MID_TERM,
        long_term_consciousness=_LONG_TERM,
        school_closure_psych=_SCHOOL_CLOSURE,
        school_closure_commute=_SCHOOL_CLOSURE,
        stay_at_home=stay_at_home,
        focused_intervention=_FOCUSED_OFF,
        new_normal=_NEW_NORMAL_LATCH,
    )


def _build_presets() -> dict[str, ScenarioSpec]:
    return {
        "realistic": _scenario(
            "realistic",
            dated_schedule(0.0, *_SHORT_OFF_MAY, ("2020-07-05", 1.0), ("2020-09-15", 0.0)),
            dated_schedule(0.0, ("2020-04-08", 1.0), ("2020-05-26", 0.0)),
        ),
        "second_emergency": _scenario(
            "second_emergency",
            dated_schedule(0.0, *_SHORT_OFF_MAY, ("2020-07-05", 1.0), ("2020-09-01", 0.0)),
            dated_schedule(
                0.0,
                ("2020-04-08", 1.0),
                ("2020-05-26", 0.0),
                ("2020-07-19", 1.0),
                ("2020-09-01", 0.0),
            ),
        ),
        "pre_emptive_shorter": _scenario(
            "pre_emptive_shorter",
            dated_schedule(0.0, *_SHORT_OFF_MAY, ("2020-06-28", 1.0), ("2020-07-28", 0.0)),
            dated_schedule(
                0.0,
                ("2020-04-08", 1.0),
                ("2020-05-26", 0.0),
                ("2020-06-28", 1.0),
                ("2020-07-28", 0.0),
            ),
        ),
        "exhaustive": _scenario(
            "exhaustive",
            dated_schedule(0.0, *_SHORT_OFF_MAY, ("2020-07-03", 1.0), ("2020-09-01", 0.0)),
            dated_schedule(
                0.0,
                ("2020-03-29", 1.0),
                ("2020-05-30", 0.0),
                ("2020-06-03", 1.0),
                ("2020-09-01", 0.0),
            ),
        ),
    }


_PRESETS = _build_presets()


def preset(preset_id: str) -> ScenarioSpec:
    """Look up one of the four built-in scenarios."""
    try:
        return _PRESETS[preset_id]
    except KeyError:
        raise UnknownPresetError(preset_id) from None


def all_presets() -> dict[str, ScenarioSpec]:
    return dict(_PRESETS)
