"""Stateless HTTP facade serving the scenario workbench.

Endpoints:
    GET  /api/healthz   liveness + engine version
    GET  /api/presets   the four built-in scenarios with their schedules
    POST /api/simulate  run a preset or an inline scenario document

Error contract: 400 for a malformed body (with the offending field path),
422 for invariant violations in well-formed content (e.g. a non-binary
schedule value), 500 for engine failures. Every request builds and runs
its own model instance; there is no server-side session or storage.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .engine import SimulationError
from .outputs import simulate_request
from .tokyo import (
    SIM_HORIZON_DAYS,
    ScenarioDocument,
    ScenarioFormatError,
    all_presets,
    scenario_from_dict,
    scenario_to_dict,
)

UI_DIR_ENV_VAR = "NPIFLOW_UI_DIR"

app = FastAPI(title="npiflow", version=__version__)


class SimRequestBody(BaseModel):
    """Exactly one of ``preset`` or ``scenario`` must be present."""

    preset: str | None = None
    scenario: dict[str, Any] | None = None
    param_overrides: dict[str, float] = Field(default_factory=dict)
    horizon_days: int = SIM_HORIZON_DAYS
    dt: float = 1.0


@app.exception_handler(RequestValidationError)
async def _malformed_body(request: Request, exc: RequestValidationError):
    details = [
        {"path": ".".join(str(part) for part in err["loc"]), "message": err["msg"]}
        for err in exc.errors()
    ]
    return JSONResponse(status_code=400, content={"error": "malformed request body",
                                                  "details": details})


@app.exception_handler(ScenarioFormatError)
async def _scenario_error(request: Request, exc: ScenarioFormatError):
    status = 400 if exc.kind == "malformed" else 422
    return JSONResponse(status_code=status,
                        content={"error": str(exc), "path": exc.path})


@app.exception_handler(SimulationError)
async def _engine_error(request: Request, exc: SimulationError):
    return JSONResponse(status_code=500, content={"error": str(exc)})


@app.get("/api/healthz")
def healthz() -> dict[str, str]:
    return {"status": "ok", "version": __version__}


@app.get("/api/presets")
def presets() -> dict[str, Any]:
    documents = [
        scenario_to_dict(ScenarioDocument(spec=spec)) for spec in all_presets().values()
    ]
    return {"presets": documents}


@app.post("/api/simulate")
def simulate(body: SimRequestBody) -> dict[str, Any]:
    if (body.preset is None) == (body.scenario is None):
        raise ScenarioFormatError(
            "preset|scenario", "exactly one of 'preset' or 'scenario' must be given",
            kind="invariant",
        )
    if body.preset is not None:
        from .tokyo import UnknownPresetError, preset

        try:
            document = ScenarioDocument(spec=preset(body.preset))
        except UnknownPresetError as exc:
            raise ScenarioFormatError("preset", str(exc.args[0]), kind="invariant") from None
    else:
        document = scenario_from_dict(body.scenario)

    try:
        output = simulate_request(
            document,
            horizon_days=body.horizon_days,
            step_days=dt_days_guard(body.dt),
            extra_overrides=body.param_overrides,
        )
    except ValueError as exc:
        raise ScenarioFormatError("request", str(exc), kind="invariant") from None

    return {
        "dates": [d.isoformat() for d in output.dates],
        "series": {name: list(values) for name, values in output.series.items()},
        "scenario": scenario_to_dict(output.document),
        "engine_version": __version__,
    }


def dt_days_guard(dt_value: float) -> float:
    if not 0.0 < dt_value <= 1.0:
        raise ScenarioFormatError("dt", "dt must satisfy 0 < dt <= 1", kind="invariant")
    return dt_value


def mount_ui(application: FastAPI) -> bool:
    """Serve the built workbench statics when present (after API routes)."""
    ui_dir = Path(os.environ.get(UI_DIR_ENV_VAR, "frontend/dist"))
    if ui_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        application.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
        return True
    return False


mount_ui(app)
