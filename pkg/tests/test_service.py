import pytest
from fastapi.testclient import TestClient

from npiflow import __version__
from npiflow.outputs import document_for_preset, simulate_request
from npiflow.service import app
from npiflow.tokyo import PRESET_IDS, ScenarioDocument, preset, scenario_to_dict


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestHealthz:
    def test_reports_version(self, client):
        response = client.get("/api/healthz")
        assert response.status_code == 200
        assert response.json() == {"status": "ok", "version": __version__}


class TestPresets:
    def test_exactly_four_with_schedules(self, client):
        payload = client.get("/api/presets").json()
        assert [p["name"] for p in payload["presets"]] == list(PRESET_IDS)
        for entry in payload["presets"]:
            assert entry["schedules"]["stay_at_home"]
            assert entry["start_date"] == "2020-03-01"

    def test_idempotent(self, client):
        assert client.get("/api/presets").json() == client.get("/api/presets").json()


class TestSimulate:
    def test_preset_run(self, client):
        response = client.post("/api/simulate", json={"preset": "realistic"})
        assert response.status_code == 200
        body = response.json()
        assert len(body["dates"]) == 214
        for name in (
            "daily_confirmed",
            "cumulative_confirmed",
            "people_flow",
            "visits_normalized",
            "ewom_mass",
            "susceptible",
            "customer_out",
        ):
            assert len(body["series"][name]) == 214
        assert body["engine_version"] == __version__
        assert body["scenario"]["name"] == "realistic"

    def test_bit_identical_to_library_run(self, client):
        body = client.post("/api/simulate", json={"preset": "exhaustive"}).json()
        reference = simulate_request(document_for_preset("exhaustive"))
        for name, values in reference.series.items():
            assert tuple(body["series"][name]) == values, name

    def test_idempotent_and_side_effect_free(self, client):
        a = client.post("/api/simulate", json={"preset": "second_emergency"}).json()
        b = client.post("/api/simulate", json={"preset": "second_emergency"}).json()
        assert a == b

    def test_inline_scenario_equals_equivalent_preset(self, client):
        document = ScenarioDocument(spec=preset("second_emergency"))
        body = {"scenario": scenario_to_dict(document)}
        inline = client.post("/api/simulate", json=body).json()
        direct = client.post("/api/simulate", json={"preset": "second_emergency"}).json()
        assert inline["series"] == direct["series"]

    def test_non_binary_schedule_value_is_422(self, client):
        response = client.post(
            "/api/simulate",
            json={"scenario": {"schedules": {"stay_at_home": [["2020-04-08", 2]]}}},
        )
        assert response.status_code == 422
        assert "binary" in response.json()["error"]

    def test_unknown_preset_is_422(self, client):
        response = client.post("/api/simulate", json={"preset": "bogus"})
        assert response.status_code == 422
        assert "realistic" in response.json()["error"]

    def test_malformed_body_is_400_with_field_path(self, client):
        response = client.post("/api/simulate", json={"preset": 123})
        assert response.status_code == 400
        assert response.json()["details"][0]["path"] == "body.preset"

    def test_neither_source_is_422(self, client):
        assert client.post("/api/simulate", json={}).status_code == 422

    def test_both_sources_is_422(self, client):
        body = {"preset": "realistic", "scenario": {"schedules": {}}}
        assert client.post("/api/simulate", json=body).status_code == 422

    def test_custom_horizon(self, client):
        response = client.post(
            "/api/simulate", json={"preset": "realistic", "horizon_days": 30}
        )
        assert len(response.json()["dates"]) == 31

    def test_bad_dt_is_422(self, client):
        response = client.post("/api/simulate", json={"preset": "realistic", "dt": 3.0})
        assert response.status_code == 422

    def test_param_override_applies(self, client):
        base = client.post("/api/simulate", json={"preset": "realistic"}).json()
        scaled = client.post(
            "/api/simulate",
            json={"preset": "realistic",
                  "param_overrides": {"disease.transmission_scale": 0.5}},
        ).json()
        assert scaled["series"]["daily_confirmed"][100] < base["series"]["daily_confirmed"][100]
        assert scaled["series"]["visits_normalized"] == base["series"]["visits_normalized"]
