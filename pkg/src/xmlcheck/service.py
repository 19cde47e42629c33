"""Stateless HTTP validation service; also hosts the browser editor's assets.

Endpoints: POST /api/validate (JSON in, per-document report out, HTTP 200
even for invalid documents), GET /healthz, and static files at the root.
Validation outcome is data, not an HTTP error; 4xx is reserved for protocol
problems (bad JSON, missing source, oversized body).
"""

from __future__ import annotations

import argparse
import json
import os

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.concurrency import run_in_threadpool

from . import __version__
from .options import ParserOptions
from .wellformed import check_document

DEFAULT_MAX_SOURCE_BYTES = 10 * 1024 * 1024


def _bad_request(message: str) -> JSONResponse:
    return JSONResponse({"error": message}, status_code=400)


def _parse_options(raw: object) -> ParserOptions | JSONResponse:
    if raw is None:
        return ParserOptions()
    if not isinstance(raw, dict):
        return _bad_request("'options' must be an object")
    require_declaration = raw.get("requireDeclaration", True)
    if not isinstance(require_declaration, bool):
        return _bad_request("'options.requireDeclaration' must be a boolean")
    max_errors = raw.get("maxErrors", 100)
    if isinstance(max_errors, bool) or not isinstance(max_errors, int) or max_errors < 1:
        return _bad_request("'options.maxErrors' must be a positive integer")
    return ParserOptions(require_declaration=require_declaration, max_errors=max_errors)


def create_app(
    asset_dir: str | os.PathLike | None = None,
    max_source_bytes: int = DEFAULT_MAX_SOURCE_BYTES,
) -> FastAPI:
    """Build the application; each request validates independently."""
    app = FastAPI(
        title="xmlcheck validation service",
        version=__version__,
        docs_url=None,
        redoc_url=None,
        openapi_url=None,
    )

    @app.post("/api/validate")
    async def validate(request: Request) -> JSONResponse:
        body = await request.body()
        if len(body) > max_source_bytes:
            return JSONResponse(
                {"error": f"request body exceeds the {max_source_bytes} byte limit"},
                status_code=413,
            )
        try:
            payload = json.loads(body)
        except ValueError:
            return _bad_request("request body is not valid JSON")
        if not isinstance(payload, dict):
            return _bad_request("request body must be a JSON object")
        source = payload.get("source")
        if not isinstance(source, str):
            return _bad_request("missing required string field 'source'")
        options = _parse_options(payload.get("options"))
        if isinstance(options, JSONResponse):
            return options
        report = await run_in_threadpool(check_document, source, None, options)
        return JSONResponse(report.to_json_dict())

    @app.api_route("/healthz", methods=["GET", "HEAD"])
    async def health() -> dict:
        return {"status": "ok"}

    @app.api_route("/api/{_rest:path}", methods=["GET", "POST", "PUT", "DELETE", "PATCH"])
    async def api_not_found(_rest: str) -> JSONResponse:
        return JSONResponse({"error": "not found"}, status_code=404)

    if asset_dir is not None:
        app.mount(
            "/", StaticFiles(directory=asset_dir, html=True, check_dir=False), name="editor"
        )
    return app


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="xmlcheck-serve", description="Run the XML validation service."
    )
    parser.add_argument(
        "--host", default=os.environ.get("XMLCHECK_HOST", "127.0.0.1")
    )
    parser.add_argument(
        "--port", type=int, default=int(os.environ.get("XMLCHECK_PORT", "8080"))
    )
    parser.add_argument(
        "--assets",
        default=os.environ.get("XMLCHECK_ASSETS"),
        help="directory of editor assets to serve at /",
    )
    parser.add_argument(
        "--max-bytes",
        type=int,
        default=int(os.environ.get("XMLCHECK_MAX_BYTES", str(DEFAULT_MAX_SOURCE_BYTES))),
        help="maximum accepted request body size",
    )
    args = parser.parse_args(argv)

    import uvicorn

    uvicorn.run(
        create_app(asset_dir=args.assets, max_source_bytes=args.max_bytes),
        host=args.host,
        port=args.port,
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
