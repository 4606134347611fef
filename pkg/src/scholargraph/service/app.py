"""FastAPI application exposing search, stats, pipelines, and concepts.

Handlers are thin: every payload is the serialized result of the
corresponding in-process call. Errors always come back as
{"error": {"code", "message", "details"}} with a machine-readable code.
The graph is loaded once and never mutated while serving.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from urllib.parse import unquote

from fastapi import Body, FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .. import __version__
from ..corpus.ingest import parse_corpus
from ..dataflow.executor import execute
from ..dataflow.pipeline import parse_pipeline, validate
from ..errors import PipelineFormatError, PipelineValidationError
from ..kg.build import build_graph
from ..kg.model import DEFAULT_NAMESPACE, EntityType, KnowledgeGraph
from ..kg.turtle import parse_turtle
from ..query.engine import fuzzy_query

DEFAULT_PORT = 8040
DEFAULT_HOST = "127.0.0.1"


def env_port(default: int = DEFAULT_PORT) -> int:
    return int(os.environ.get("SCHOLARGRAPH_PORT", default))


def env_namespace(default: str = DEFAULT_NAMESPACE) -> str:
    return os.environ.get("SCHOLARGRAPH_NAMESPACE", default)


def env_linker_url(default: str | None = None) -> str | None:
    return os.environ.get("SCHOLARGRAPH_LINKER_URL", default)


@dataclass(frozen=True)
class ServiceConfig:
    graph_path: str
    host: str = DEFAULT_HOST
    port: int = DEFAULT_PORT
    namespace: str = DEFAULT_NAMESPACE


class ApiException(Exception):
    """Carried out of handlers and rendered as the ApiError envelope."""

    def __init__(self, status: int, code: str, message: str, details: dict | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.details = details or {}


def _error_response(status: int, code: str, message: str, details: dict | None = None):
    return JSONResponse(
        status_code=status,
        content={"error": {"code": code, "message": message, "details": details or {}}},
    )


def load_graph(path: str | Path, namespace: str | None = None) -> KnowledgeGraph:
    """Load a Turtle snapshot (.ttl) or build from a corpus JSONL file."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"graph file not found: {path}")
    if path.suffix == ".ttl":
        with path.open("r", encoding="utf-8") as handle:
            return parse_turtle(handle)
    with path.open("r", encoding="utf-8") as handle:
        result = parse_corpus(handle)
    graph, _ = build_graph(result.records, namespace or env_namespace())
    return graph


def create_app(graph: KnowledgeGraph) -> FastAPI:
    app = FastAPI(title="scholargraph", version=__version__)
    app.state.graph = graph

    @app.exception_handler(ApiException)
    async def api_exception_handler(request: Request, exc: ApiException):
        return _error_response(exc.status, exc.code, exc.message, exc.details)

    @app.exception_handler(StarletteHTTPException)
    async def http_exception_handler(request: Request, exc: StarletteHTTPException):
        if exc.status_code == 404:
            code = "not_found"
        elif exc.status_code < 500:
            code = "bad_request"
        else:
            code = "internal"
        return _error_response(exc.status_code, code, str(exc.detail))

    @app.exception_handler(RequestValidationError)
    async def request_validation_handler(request: Request, exc: RequestValidationError):
        details = {
            "errors": [
                {"loc": [str(part) for part in err.get("loc", ())], "msg": str(err.get("msg", ""))}
                for err in exc.errors()
            ]
        }
        return _error_response(400, "bad_request", "invalid request parameters", details)

    @app.exception_handler(Exception)
    async def fallback_handler(request: Request, exc: Exception):
        return _error_response(500, "internal", str(exc))

    # -- endpoints ----------------------------------------------------

    @app.get("/healthz")
    def healthz():
        stats = graph.stats()
        return {
            "status": "ok",
            "version": __version__,
            "total_entities": stats.total_entities,
            "total_relations": stats.total_relations,
        }

    @app.get("/stats")
    def stats():
        return graph.stats().to_dict()

    @app.get("/entities/search")
    def search(
        q: str,
        type: str = Query(...),
        limit: int = Query(20, ge=0),
        offset: int = Query(0, ge=0),
    ):
        try:
            etype = EntityType.from_value(type)
        except ValueError as exc:
            raise ApiException(400, "bad_request", str(exc), {"field": "type"}) from None
        terms = [part.strip() for part in q.split(",") if part.strip()]
        if not terms:
            raise ApiException(
                400, "bad_request", "q must contain at least one non-blank term", {"field": "q"}
            )
        iris = fuzzy_query(terms, etype, graph, limit=offset + limit)
        page = iris[offset : offset + limit]
        entities = []
        for iri in page:
            entity = graph.entity(iri)
            entities.append(
                {"iri": iri, "type": entity.etype.value, "label": entity.display_name}
            )
        return {"iris": page, "entities": entities, "limit": limit, "offset": offset}

    # path transport percent-decodes, so iris holding encoded characters
    # (e.g. %20 from entity keys) are matched via their decoded form too
    decoded_iris: dict[str, str] = {}
    for known in sorted(graph.entities):
        decoded_iris.setdefault(unquote(known), known)

    def _resolve_iri(raw: str) -> str | None:
        for candidate in (raw, unquote(raw)):
            if candidate in graph:
                return candidate
            if candidate in decoded_iris:
                return decoded_iris[candidate]
        return None

    @app.get("/concepts/{iri:path}")
    def concept_detail(iri: str):
        resolved = _resolve_iri(iri)
        if resolved is None:
            raise ApiException(404, "not_found", f"unknown entity: {iri}", {"iri": iri})
        entity = graph.entity(resolved)
        if entity.etype is not EntityType.CONCEPT:
            raise ApiException(
                404, "not_found", f"not a concept: {resolved}", {"iri": resolved}
            )
        return {
            "iri": resolved,
            "type": entity.etype.value,
            "name": entity.display_name,
            "dbpedia_url": entity.attributes.get("dbpediaUrl"),
            "attributes": dict(entity.attributes),
        }

    def _parse_pipeline_or_400(document: dict):
        try:
            return parse_pipeline(document)
        except PipelineFormatError as exc:
            raise ApiException(400, "bad_request", str(exc)) from None

    @app.post("/pipelines/validate")
    def validate_pipeline(document: dict = Body(...)):
        pipeline = _parse_pipeline_or_400(document)
        violations = validate(pipeline)
        return {"valid": not violations, "violations": [v.to_dict() for v in violations]}

    @app.post("/pipelines/execute")
    def execute_pipeline(document: dict = Body(...)):
        pipeline = _parse_pipeline_or_400(document)
        try:
            trace = execute(pipeline, graph)
        except PipelineValidationError as exc:
            components = sorted({cid for v in exc.violations for cid in v.components})
            raise ApiException(
                422,
                "validation_failed",
                "pipeline failed validation",
                {
                    "violations": [v.to_dict() for v in exc.violations],
                    "components": components,
                },
            ) from None
        return trace.to_dict()

    return app


def serve(config: ServiceConfig) -> None:
    """Load the graph and block serving HTTP until interrupted."""
    import uvicorn

    graph = load_graph(config.graph_path, config.namespace)
    app = create_app(graph)
    uvicorn.run(app, host=config.host, port=config.port)
