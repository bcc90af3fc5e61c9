"""Stateless HTTP facade over the ranking engine.

Endpoints (JSON in, JSON out):

* ``POST /api/v1/rank``   — body ``{problem, options?, include_intermediates?}``
* ``POST /api/v1/sweep``  — body ``{problem, criterion, steps?, options?}``
* ``GET  /api/v1/health``

Problems travel in the structured-object format of the ingestion layer.
Responses are pure functions of the request body; nothing is persisted.
Parse and validation failures return 400, degenerate problems 422, both with
``{error, violations: [{code, path, message}]}``.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .analysis import weight_sweep
from .core import Distance, EvalOptions, IdealMode, evaluate
from .errors import DegenerateProblemError, IdealrankError, ParseError, Violation
from .ingestion import problem_from_document

DEFAULT_SWEEP_STEPS = 11


def _schema_error(path: str, message: str) -> ParseError:
    return ParseError([Violation("SchemaError", path, message)])


async def _json_body(request: Request) -> dict:
    raw = await request.body()
    try:
        body = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError([Violation("SyntaxError", f"line {exc.lineno}, column {exc.colno}", exc.msg)]) from exc
    if not isinstance(body, dict):
        raise _schema_error("$", "request body must be a JSON object")
    return body


def _options_from(body: dict) -> EvalOptions:
    raw = body.get("options", {})
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise _schema_error("options", "must be an object")
    try:
        ideal_mode = IdealMode(raw.get("ideal_mode", IdealMode.HONOR_KINDS.value))
    except ValueError:
        raise _schema_error("options.ideal_mode", f"must be one of {[m.value for m in IdealMode]}") from None
    try:
        distance = Distance(raw.get("distance", Distance.EUCLIDEAN.value))
    except ValueError:
        raise _schema_error("options.distance", f"must be one of {[d.value for d in Distance]}") from None
    normalize_weights = raw.get("normalize_weights", False)
    if not isinstance(normalize_weights, bool):
        raise _schema_error("options.normalize_weights", "must be a boolean")
    return EvalOptions(ideal_mode, distance, normalize_weights)


def _problem_from(body: dict):
    if "problem" not in body:
        raise _schema_error("$", "missing required field 'problem'")
    return problem_from_document(body["problem"])


def create_app() -> FastAPI:
    app = FastAPI(title="idealrank", version=__version__, docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(DegenerateProblemError)
    async def _degenerate(request: Request, exc: DegenerateProblemError):
        return JSONResponse(
            status_code=422,
            content={"error": "degenerate-problem", "violations": [v.to_document() for v in exc.violations]},
        )

    @app.exception_handler(IdealrankError)
    async def _invalid(request: Request, exc: IdealrankError):
        return JSONResponse(
            status_code=400,
            content={"error": "invalid-request", "violations": [v.to_document() for v in exc.violations]},
        )

    @app.post("/api/v1/rank")
    async def handle_rank(request: Request):
        body = await _json_body(request)
        problem = _problem_from(body)
        options = _options_from(body)
        include = body.get("include_intermediates", False)
        if not isinstance(include, bool):
            raise _schema_error("include_intermediates", "must be a boolean")
        report = evaluate(problem, options)
        doc = report.to_document(include_intermediates=include)
        doc["version"] = __version__
        return doc

    @app.post("/api/v1/sweep")
    async def handle_sweep(request: Request):
        body = await _json_body(request)
        problem = _problem_from(body)
        options = _options_from(body)
        criterion = body.get("criterion")
        if not isinstance(criterion, str):
            raise _schema_error("criterion", "must be a string naming a criterion")
        steps = body.get("steps", DEFAULT_SWEEP_STEPS)
        if not isinstance(steps, int) or isinstance(steps, bool) or steps < 2:
            raise _schema_error("steps", "must be an integer >= 2")
        result = weight_sweep(problem, criterion, steps, options)
        doc = result.to_document()
        doc["version"] = __version__
        return doc

    @app.get("/api/v1/health")
    async def handle_health():
        return {"status": "ok", "version": __version__}

    return app


app = create_app()
