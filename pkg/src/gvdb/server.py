"""HTTP API: annotation workflow endpoints plus stats/map/query/export.

Auth is a static worker id (X-Worker-Id header or ?worker= query param);
workers are registered on first use. Offsets in every payload are Unicode
scalar values into the article body_text served by /api/articles/{id},
which is authoritative for span anchors.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request
from fastapi.responses import FileResponse, JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from .aggregate import (
    BadQueryError,
    compute_stats,
    export_line_records,
    export_table,
    map_aggregate,
    query_incidents,
)
from .annotation import (
    FULL_ANNOTATION,
    NotReadyError,
    StaleLeaseError,
    TASK_KINDS,
    TRIAGE,
    UnknownWorkerError,
)
from .db import Database
from .records import CIRCUMSTANCE_FIELDS, IncidentRecord

_QUERY_SCALARS = ("state", "city", "date_from", "date_to", "provenance", "status")


def _task_payload(db: Database, task) -> dict:
    article = db.articles.get(task.article_id)
    return {
        "task": task.to_json(),
        "article": article.to_json() if article else None,
    }


def create_app(db: Database, ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="gvdb", version="0.1.0")

    @app.exception_handler(StaleLeaseError)
    async def _stale(request, exc):
        return JSONResponse({"error": "stale_lease", "detail": str(exc)}, status_code=409)

    @app.exception_handler(NotReadyError)
    async def _not_ready(request, exc):
        return JSONResponse({"error": "not_ready", "detail": str(exc)}, status_code=409)

    @app.exception_handler(BadQueryError)
    async def _bad_query(request, exc):
        return JSONResponse({"error": "bad_query", "detail": str(exc)}, status_code=400)

    def _worker_id(request: Request, body: dict | None = None) -> str:
        worker = (body or {}).get("worker_id") or request.query_params.get("worker") \
            or request.headers.get("X-Worker-Id")
        if not worker:
            raise BadQueryError("worker id required (X-Worker-Id header, ?worker=, or body worker_id)")
        db.queue.register_worker(worker)
        return worker

    @app.get("/api/articles/{article_id}")
    def get_article(article_id: str):
        article = db.articles.get(article_id)
        if article is None:
            return JSONResponse({"error": "not_found"}, status_code=404)
        return article.to_json()

    @app.get("/api/tasks/next")
    def next_task(request: Request, kind: str = TRIAGE):
        if kind not in TASK_KINDS:
            raise BadQueryError(f"kind must be one of {TASK_KINDS}")
        worker = _worker_id(request)
        task = db.queue.lease_task(worker, kind)
        if task is None:
            return {"task": None}
        return _task_payload(db, task)

    @app.post("/api/tasks/{task_id}/triage")
    async def post_triage(task_id: str, request: Request):
        body = await request.json()
        worker = _worker_id(request, body)
        verdict = body.get("verdict")
        if verdict not in ("yes", "no"):
            raise BadQueryError(f"verdict must be yes or no, got {verdict!r}")
        if db.queue.task(task_id) is None:
            return JSONResponse({"error": "not_found"}, status_code=404)
        result = db.queue.submit_triage(task_id, worker, verdict)
        db.save()
        return result

    @app.post("/api/tasks/{task_id}/annotation")
    async def post_annotation(task_id: str, request: Request):
        body = await request.json()
        worker = _worker_id(request, body)
        if db.queue.task(task_id) is None:
            return JSONResponse({"error": "not_found"}, status_code=404)
        record = IncidentRecord.from_json(body.get("record") or {})
        result = db.queue.submit_annotation(task_id, worker, record)
        if not result["accepted"]:
            return JSONResponse({
                "accepted": False,
                "violations": [{"code": v.code, "field": v.field, "message": v.message}
                               for v in result["violations"]],
            }, status_code=422)
        db.save()
        return {"accepted": True, "record_id": result["record_id"]}

    @app.post("/api/tasks/{task_id}/renew")
    async def renew(task_id: str, request: Request):
        body = await request.json() if int(request.headers.get("content-length") or 0) else {}
        worker = _worker_id(request, body)
        task = db.queue.renew_lease(task_id, worker)
        return _task_payload(db, task)

    @app.get("/api/stats")
    def stats():
        return compute_stats(db.articles, db.incidents).to_json()

    @app.get("/api/map")
    def map_view():
        return map_aggregate(db.incidents, db.resources.gazetteer, db.linkage_params).to_json()

    @app.get("/api/incidents")
    def incidents(request: Request):
        filters: dict = {}
        page, page_size = 1, db.config.page_size
        circumstances: dict = {}
        for key, value in request.query_params.items():
            if key in _QUERY_SCALARS:
                filters[key] = value
            elif key in CIRCUMSTANCE_FIELDS:
                circumstances[key] = value
            elif key == "cluster_view":
                filters["cluster_view"] = value.lower() in ("1", "true", "yes")
            elif key == "page":
                page = int(value)
            elif key == "page_size":
                page_size = int(value)
            else:
                raise BadQueryError(f"unknown filter key {key!r}")
        if circumstances:
            filters["circumstances"] = circumstances
        return query_incidents(db.incidents, filters, page=page, page_size=page_size,
                               params=db.linkage_params).to_json()

    @app.get("/api/export")
    def export(format: str = "line-records", view: str = "articles"):
        if format == "table":
            return PlainTextResponse(export_table(db.incidents, view, db.linkage_params),
                                     media_type="text/csv")
        if format == "line-records":
            return PlainTextResponse(export_line_records(db.incidents, view, db.linkage_params),
                                     media_type="application/x-ndjson")
        raise BadQueryError(f"unknown export format {format!r}")

    if ui_dir and os.path.isdir(ui_dir):
        index = os.path.join(ui_dir, "index.html")

        @app.get("/")
        def root():
            return FileResponse(index)

        app.mount("/ui", StaticFiles(directory=ui_dir), name="ui")

    return app
