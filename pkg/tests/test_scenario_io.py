import datetime as dt
import json

import pytest

from npiflow.engine import Schedule
from npiflow.tokyo import (
    DiseaseParams,
    MobilityBehaviorParams,
    RestaurantParams,
    ScenarioDocument,
    ScenarioFormatError,
    apply_overrides,
    load_scenario,
    preset,
    save_scenario,
    scenario_from_dict,
    scenario_to_dict,
)


def minimal_doc(**extra):
    doc = {
        "name": "test",
        "start_date": "2020-03-01",
        "schedules": {"stay_at_home": [["2020-04-08", 1], ["2020-05-26", 0]]},
        "param_overrides": {},
    }
    doc.update(extra)
    return doc


class TestParsing:
    def test_minimal_document(self):
        document = scenario_from_dict(minimal_doc())
        assert document.spec.stay_at_home == Schedule(0.0, ((38, 1.0), (86, 0.0)))
        assert document.spec.focused_intervention == Schedule(0.0)
        assert document.start == dt.date(2020, 3, 1)

    def test_day_zero_entry_sets_initial_value(self):
        document = scenario_from_dict(
            minimal_doc(schedules={"school_closure_psych": [["2020-03-01", 1], ["2020-05-26", 0]]})
        )
        assert document.spec.school_closure_psych.value_at(0) == 1.0
        assert document.spec.school_closure_psych.value_at(86) == 0.0
        # the commuting input mirrors the psychological one when omitted
        assert document.spec.school_closure_commute == document.spec.school_closure_psych

    def test_missing_new_normal_left_unresolved(self):
        document = scenario_from_dict(minimal_doc())
        assert document.spec.new_normal is None

    def test_unknown_schedule_name(self):
        with pytest.raises(ScenarioFormatError, match="unknown schedule"):
            scenario_from_dict(minimal_doc(schedules={"lockdown": []}))

    def test_non_binary_value_is_invariant_violation(self):
        with pytest.raises(ScenarioFormatError) as exc:
            scenario_from_dict(minimal_doc(schedules={"stay_at_home": [["2020-04-08", 2]]}))
        assert exc.value.kind == "invariant"

    def test_bad_pair_shape_is_malformed(self):
        with pytest.raises(ScenarioFormatError) as exc:
            scenario_from_dict(minimal_doc(schedules={"stay_at_home": [["2020-04-08"]]}))
        assert exc.value.kind == "malformed"
        assert "stay_at_home[0]" in exc.value.path

    def test_bad_date(self):
        with pytest.raises(ScenarioFormatError, match="stay_at_home"):
            scenario_from_dict(minimal_doc(schedules={"stay_at_home": [["not-a-date", 1]]}))

    def test_unknown_override_listed(self):
        with pytest.raises(ScenarioFormatError, match="disease.transmission_scale"):
            scenario_from_dict(minimal_doc(param_overrides={"disease.nope": 1}))


class TestRoundTrip:
    def test_preset_document_round_trips(self, tmp_path):
        document = ScenarioDocument(
            spec=preset("second_emergency"),
            param_overrides={"disease.transmission_scale": 1.3},
        )
        path = tmp_path / "scenario.json"
        save_scenario(document, path)
        loaded = load_scenario(path)
        assert loaded.param_overrides == {"disease.transmission_scale": 1.3}
        # schedule objects differ in representation (defaults become day-0
        # entries) but must define the same step function
        for name, schedule in document.spec.schedules().items():
            reloaded = loaded.spec.schedules()[name]
            for day in range(0, 214):
                assert reloaded.value_at(day) == schedule.value_at(day), (name, day)

    def test_serialised_shape(self):
        payload = scenario_to_dict(ScenarioDocument(spec=preset("realistic")))
        assert set(payload) == {"name", "start_date", "schedules", "param_overrides"}
        assert payload["schedules"]["stay_at_home"] == [
            ["2020-04-08", 1.0], ["2020-05-26", 0.0],
        ]
        # initial-on schedule starts with a day-0 entry
        assert payload["schedules"]["school_closure_psych"][0] == ["2020-03-01", 1.0]
        assert json.dumps(payload)  # JSON-serialisable

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ScenarioFormatError, match="JSON"):
            load_scenario(path)


class TestOverrides:
    def test_apply_to_each_group(self):
        disease, mobility, restaurant = apply_overrides(
            DiseaseParams(),
            MobilityBehaviorParams(),
            RestaurantParams(),
            {
                "disease.transmission_scale": 1.5,
                "mobility.distancing_factor": 0.4,
                "restaurant.dining_return_days": 2.0,
            },
        )
        assert disease.transmission_scale == 1.5
        assert mobility.distancing_factor == 0.4
        assert restaurant.dining_return_days == 2.0
        # untouched fields keep defaults
        assert disease.apparent_ratio == 0.375

    def test_unknown_key_rejected(self):
        with pytest.raises(ScenarioFormatError, match="unknown parameter"):
            apply_overrides(
                DiseaseParams(), MobilityBehaviorParams(), RestaurantParams(),
                {"engine.dt": 0.5},
            )

    def test_invalid_value_propagates_param_validation(self):
        with pytest.raises(ValueError):
            apply_overrides(
                DiseaseParams(), MobilityBehaviorParams(), RestaurantParams(),
                {"disease.apparent_ratio": 2.0},
            )
