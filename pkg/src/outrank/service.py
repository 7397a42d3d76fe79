"""HTTP API serving rankings over an immutable dataset snapshot.

The dataset is loaded once at startup and never mutated; every request runs a
pure computation against it, so concurrent requests are safe. Responses are
serialised with the deterministic writer from ``jsonutil`` so the batch CLI
and the API produce byte-identical documents for the same inputs.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse, Response

from .boxscore import BoxScoreLine, eligibility_filter
from .exceptions import OutrankError, RequestError
from .jsonutil import dump_json
from .pipeline import (SCHEMA_VERSION, RankRequest, criteria_payload,
                       player_indices_payload, run_rank)

_REQUEST_FIELDS = ("profile", "scenario", "alpha", "beta", "function_kind",
                   "scenario2_residual")


def json_response(payload, status_code: int = 200) -> Response:
    return Response(content=dump_json(payload), status_code=status_code,
                    media_type="application/json")


def _error_response(status_code: int, code: str, message: str) -> Response:
    return json_response(
        {"schema_version": SCHEMA_VERSION,
         "error": {"code": code, "message": message}},
        status_code=status_code)


def build_rank_request(body) -> RankRequest:
    """Typed request from a decoded JSON body; unknown keys are ignored."""
    if not isinstance(body, dict):
        raise RequestError("invalid_request", "request body must be a JSON object")
    kwargs = {}
    for name in _REQUEST_FIELDS:
        if name not in body or body[name] is None:
            continue
        value = body[name]
        if name == "profile":
            if not isinstance(value, str):
                raise RequestError("unknown_profile", "profile must be a string")
        elif name == "function_kind":
            if not isinstance(value, str):
                raise RequestError("unknown_function_kind",
                                   "function_kind must be a string")
        elif name == "scenario":
            if not isinstance(value, (str, int, Mapping)) or isinstance(value, bool):
                raise RequestError("invalid_scenario",
                                   "scenario must be a string, integer or weight map")
        kwargs[name] = value
    return RankRequest(**kwargs)


def create_app(lines: Sequence[BoxScoreLine], ui_dir: str | None = None) -> FastAPI:
    """Application over a fixed dataset; ``ui_dir`` optionally serves the explorer."""
    eligible = tuple(eligibility_filter(lines))
    players_doc = player_indices_payload(eligible)
    criteria_doc = criteria_payload()

    app = FastAPI(title="outrank", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                       allow_headers=["*"])

    @app.get("/healthz")
    def healthz() -> PlainTextResponse:
        return PlainTextResponse("ok")

    @app.get("/api/players")
    def players() -> Response:
        return json_response(players_doc)

    @app.get("/api/criteria")
    def criteria() -> Response:
        return json_response(criteria_doc)

    @app.post("/api/rank")
    async def rank(request: Request) -> Response:
        try:
            body = await request.json()
        except Exception:
            return _error_response(400, "malformed_json",
                                   "request body is not valid JSON")
        try:
            rank_request = build_rank_request(body)
            result = run_rank(eligible, rank_request)
        except RequestError as exc:
            return _error_response(422, exc.code, str(exc))
        except OutrankError as exc:
            return _error_response(422, "invalid_request", str(exc))
        return json_response(result.to_jsonable())

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def serve(lines: Sequence[BoxScoreLine], bind: str = "127.0.0.1:8000",
          ui_dir: str | None = None) -> None:
    """Run the HTTP service until interrupted."""
    import uvicorn

    host, _, port = bind.rpartition(":")
    if not port.isdigit():
        raise OutrankError(f"bind address must look like host:port, got {bind!r}")
    app = create_app(lines, ui_dir=ui_dir)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
