"""HTTP API hosting the interactive selection loop.

The service owns one workspace under a single-writer discipline: mutations
serialize behind a lock, bump a monotonically increasing revision counter
and persist the workspace; reads evaluate against the immutable snapshot
current at call time.  Every response echoes the revision it was computed
against, and a write carrying any other revision than the current one is
rejected rather than merged.

Request and response bodies use the same document dialect as the on-disk
workspace format.  Errors come back as ``{"code", "message", "detail"}``
with 400 for validation/input problems, 404 for unknown ids and 409 for
stale revisions.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import storage
from .classify import CriteriaPair, classify_portfolio
from .errors import (
    DocumentError,
    EnumerationCapError,
    FolioError,
    InvalidInputError,
    NotFoundError,
    StaleRevisionError,
    ValidationError,
)
from .evaluate import (
    DEFAULT_ENUMERATION_CAP,
    enumerate_alternatives,
    evaluate_alternative,
    pareto_frontier,
)
from .model import Rubric, Workspace


class SessionState:
    """One loaded workspace plus its revision counter and persistence path."""

    def __init__(self, workspace: Workspace, path: Optional[Path] = None):
        self.workspace = workspace
        self.path = Path(path) if path is not None else None
        self.revision = 0
        self._lock = threading.Lock()

    def snapshot(self) -> tuple[Workspace, int]:
        with self._lock:
            return self.workspace, self.revision

    def mutate(self, new_workspace: Workspace, sent_revision) -> int:
        """Swap in a new workspace; validates, persists, bumps the revision."""
        with self._lock:
            if sent_revision is not None and sent_revision != self.revision:
                raise StaleRevisionError(sent_revision, self.revision)
            data = storage.save(new_workspace)  # validates before anything sticks
            if self.path is not None:
                self.path.write_bytes(data)
            self.workspace = new_workspace
            self.revision += 1
            return self.revision


def _error_payload(error: FolioError) -> tuple[int, dict]:
    if isinstance(error, NotFoundError):
        return 404, {"code": "not_found", "message": str(error), "detail": None}
    if isinstance(error, StaleRevisionError):
        return 409, {
            "code": "stale_revision",
            "message": str(error),
            "detail": {"sent": error.sent, "current": error.current},
        }
    if isinstance(error, ValidationError):
        return 400, {
            "code": "validation_error",
            "message": str(error),
            "detail": [str(v) for v in error.violations],
        }
    if isinstance(error, EnumerationCapError):
        return 400, {
            "code": "cap_exceeded",
            "message": str(error),
            "detail": {"requested": error.requested, "cap": error.cap},
        }
    if isinstance(error, DocumentError):
        return 400, {"code": "parse_error", "message": str(error), "detail": None}
    return 400, {"code": "invalid_input", "message": str(error), "detail": None}


async def _body(request: Request) -> dict:
    try:
        doc = json.loads(await request.body() or b"{}")
    except json.JSONDecodeError as exc:
        raise DocumentError(f"request body is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("request body must be a JSON object")
    return doc


def create_app(state: SessionState) -> FastAPI:
    app = FastAPI(title="folioselect", docs_url=None, redoc_url=None)
    # the browser workbench is served statically from elsewhere
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(FolioError)
    async def folio_error_handler(_request, error: FolioError):
        status, payload = _error_payload(error)
        return JSONResponse(status_code=status, content=payload)

    @app.get("/workspace")
    def get_workspace():
        workspace, revision = state.snapshot()
        return {"revision": revision, "workspace": storage.workspace_to_doc(workspace)}

    @app.get("/projects")
    def get_projects(rubric: Optional[str] = None, preferred_pair: Optional[str] = None):
        workspace, revision = state.snapshot()
        wanted = None
        if rubric is not None:
            try:
                wanted = Rubric(rubric)
            except ValueError:
                raise InvalidInputError(f"unknown rubric {rubric!r}") from None
        pair = None
        if preferred_pair is not None:
            try:
                pair = CriteriaPair(preferred_pair)
            except ValueError:
                raise InvalidInputError(f"unknown criteria pair {preferred_pair!r}") from None
        classified = classify_portfolio(workspace.projects, workspace.thresholds, preferred_pair=pair)
        docs = [
            storage.classified_to_doc(workspace.project(c.project_id), c)
            for c in classified
            if wanted is None or c.rubric is wanted
        ]
        return {"revision": revision, "projects": docs}

    @app.put("/thresholds")
    async def put_thresholds(request: Request):
        body = await _body(request)
        thresholds = storage.thresholds_from_doc(body.get("thresholds", body))
        workspace, _ = state.snapshot()
        revision = state.mutate(workspace.with_thresholds(thresholds), body.get("revision"))
        return {"revision": revision, "thresholds": storage.thresholds_to_doc(thresholds)}

    @app.post("/alternatives", status_code=201)
    async def post_alternative(request: Request):
        body = await _body(request)
        alternative = storage.alternative_from_doc(
            body.get("alternative", body if "id" in body else {})
        )
        workspace, _ = state.snapshot()
        if any(a.id == alternative.id for a in workspace.alternatives):
            raise ValidationError(f"alternative {alternative.id!r} already exists")
        revision = state.mutate(workspace.upsert_alternative(alternative), body.get("revision"))
        return {"revision": revision, "alternative": storage.alternative_to_doc(alternative)}

    @app.put("/alternatives/{alternative_id}")
    async def put_alternative(alternative_id: str, request: Request):
        body = await _body(request)
        doc = body.get("alternative", body if "id" in body else {})
        alternative = storage.alternative_from_doc(doc)
        if alternative.id != alternative_id:
            raise InvalidInputError(
                f"body id {alternative.id!r} does not match path id {alternative_id!r}"
            )
        workspace, _ = state.snapshot()
        workspace.alternative(alternative_id)  # 404 when absent: PUT edits, it does not create
        revision = state.mutate(workspace.upsert_alternative(alternative), body.get("revision"))
        return {"revision": revision, "alternative": storage.alternative_to_doc(alternative)}

    @app.get("/alternatives/{alternative_id}/evaluation")
    def get_evaluation(alternative_id: str):
        workspace, revision = state.snapshot()
        alternative = workspace.alternative(alternative_id)
        result = evaluate_alternative(workspace, alternative)
        return {
            "revision": revision,
            "alternative_id": alternative_id,
            "evaluation": storage.evaluation_to_doc(result),
        }

    @app.post("/whatif")
    async def post_whatif(request: Request):
        body = await _body(request)
        alternative = storage.alternative_from_doc(
            body.get("alternative", body if "id" in body else {})
        )
        workspace, revision = state.snapshot()
        result = evaluate_alternative(workspace, alternative)
        return {"revision": revision, "evaluation": storage.evaluation_to_doc(result)}

    @app.get("/pareto")
    def get_pareto():
        workspace, revision = state.snapshot()
        evaluated = [
            alt.with_result(evaluate_alternative(workspace, alt)) for alt in workspace.alternatives
        ]
        frontier, relation = pareto_frontier(evaluated)
        return {
            "revision": revision,
            "frontier": [alt.id for alt in frontier],
            "dominance": [list(pair) for pair in relation.pairs],
            "alternatives": [
                {
                    "id": alt.id,
                    "label": alt.label,
                    "evaluation": storage.evaluation_to_doc(alt.derived),
                }
                for alt in evaluated
            ],
        }

    @app.post("/enumerate")
    async def post_enumerate(request: Request):
        body = await _body(request)
        candidates = body.get("candidates")
        if not isinstance(candidates, list):
            raise InvalidInputError("body must carry a 'candidates' list")
        cap = body.get("cap", DEFAULT_ENUMERATION_CAP)
        if not isinstance(cap, int) or cap < 0:
            raise InvalidInputError(f"cap must be a nonnegative integer, got {cap!r}")
        workspace, revision = state.snapshot()
        evaluated = enumerate_alternatives(workspace, candidates, cap=cap)
        return {
            "revision": revision,
            "alternatives": [
                {
                    "id": alt.id,
                    "label": alt.label,
                    "added": [pid for _, pid in alt.derived.action_order],
                    "evaluation": storage.evaluation_to_doc(alt.derived),
                }
                for alt in evaluated
            ],
        }

    return app


def serve(workspace_path, host: str = "127.0.0.1", port: int = 8750):
    """Load a workspace and run the API until shutdown."""
    import uvicorn

    path = Path(workspace_path)
    state = SessionState(storage.load(path), path=path)
    app = create_app(state)
    uvicorn.run(app, host=host, port=port, log_level="warning")
