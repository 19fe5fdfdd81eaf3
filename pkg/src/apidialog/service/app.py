"""HTTP+JSON session service over the dialogue engine."""

from __future__ import annotations

import logging
import os
import threading
import time
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from ..dialogue import STRATEGIES
from ..dialogue.session import ACTIVE, DialogueSession, open_session
from ..errors import ApiDialogError, UnknownSession
from ..kg.model import KnowledgeGraph
from ..kg.store import load_graph
from ..recommend import recommendation
from ..retrieval import RetrievalIndex

log = logging.getLogger(__name__)

DEFAULT_TTL_SECONDS = 30 * 60

#: HTTP status by apidialog error code; anything else is a 400
_STATUS_BY_CODE = {
    "blank_query": 400,
    "unknown_option": 400,
    "no_candidates": 404,
    "unknown_session": 404,
    "unknown_api": 404,
    "session_finished": 409,
}


class CreateSessionBody(BaseModel):
    query: str
    strategy: str = "id3"
    n: int = Field(default=10, ge=1, le=1000)


class AnswerBody(BaseModel):
    option_id: str


class _StoredSession:
    __slots__ = ("session", "created_at", "last_used", "lock")

    def __init__(self, session: DialogueSession) -> None:
        self.session = session
        self.created_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
        self.last_used = time.monotonic()
        self.lock = threading.Lock()


class SessionStore:
    """In-memory session map with idle expiry."""

    def __init__(self, ttl_seconds: float = DEFAULT_TTL_SECONDS) -> None:
        self.ttl_seconds = ttl_seconds
        self._sessions: dict[str, _StoredSession] = {}
        self._lock = threading.Lock()

    def purge(self) -> None:
        cutoff = time.monotonic() - self.ttl_seconds
        with self._lock:
            stale = [k for k, v in self._sessions.items() if v.last_used < cutoff]
            for key in stale:
                del self._sessions[key]
        if stale:
            log.info("expired %d idle session(s)", len(stale))

    def put(self, session: DialogueSession) -> _StoredSession:
        stored = _StoredSession(session)
        with self._lock:
            self._sessions[session.id] = stored
        return stored

    def get(self, session_id: str) -> _StoredSession:
        with self._lock:
            stored = self._sessions.get(session_id)
        if stored is None:
            raise UnknownSession(f"no session {session_id!r}")
        stored.last_used = time.monotonic()
        return stored


def _payload(stored: _StoredSession) -> dict:
    session = stored.session
    body: dict = {
        "session": {
            "id": session.id,
            "state": session.state,
            "strategy": session.strategy,
            "query": session.query,
            "rounds": session.rounds,
            "created_at": stored.created_at,
        },
        "transcript": list(session.transcript),
    }
    if session.state == ACTIVE:
        body["question"] = session.next_question().to_dict()
    else:
        body["recommendation"] = recommendation(session).to_dict()
    return body


def _normalize_strategy(value: str) -> str:
    strategy = value.strip().lower()
    if strategy == "c45":
        strategy = "c4.5"
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {value!r}")
    return strategy


def create_app(
    graph: KnowledgeGraph | None = None,
    *,
    graph_dir: str | Path | None = None,
    index: RetrievalIndex | None = None,
    ttl_seconds: float = DEFAULT_TTL_SECONDS,
) -> FastAPI:
    """Build the service around one loaded knowledge graph."""
    if graph is None:
        if graph_dir is None:
            raise ValueError("create_app needs a graph or a graph_dir")
        graph = load_graph(graph_dir)
    index = index or RetrievalIndex(graph)
    store = SessionStore(ttl_seconds=ttl_seconds)
    app = FastAPI(title="apidialog", docs_url=None, redoc_url=None)
    app.state.graph = graph
    app.state.store = store

    @app.exception_handler(ApiDialogError)
    async def _domain_error(_request: Request, exc: ApiDialogError):
        status = _STATUS_BY_CODE.get(exc.code, 400)
        return JSONResponse(
            status_code=status, content={"code": exc.code, "message": str(exc)}
        )

    @app.exception_handler(ValueError)
    async def _value_error(_request: Request, exc: ValueError):
        return JSONResponse(
            status_code=400, content={"code": "invalid_request", "message": str(exc)}
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400, content={"code": "invalid_request", "message": str(exc)}
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "apis": len(graph.api_ids())}

    @app.post("/sessions")
    def create_session(body: CreateSessionBody) -> dict:
        store.purge()
        session = open_session(
            graph,
            index,
            body.query,
            strategy=_normalize_strategy(body.strategy),
            n=body.n,
        )
        stored = store.put(session)
        with stored.lock:
            return _payload(stored)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        store.purge()
        stored = store.get(session_id)
        with stored.lock:
            return _payload(stored)

    @app.post("/sessions/{session_id}/answer")
    def answer(session_id: str, body: AnswerBody) -> dict:
        store.purge()
        stored = store.get(session_id)
        with stored.lock:
            stored.session.apply_selection(body.option_id)
            return _payload(stored)

    @app.post("/sessions/{session_id}/stop")
    def stop(session_id: str) -> dict:
        store.purge()
        stored = store.get(session_id)
        with stored.lock:
            stored.session.stop()
            return _payload(stored)

    return app


def create_app_from_env() -> FastAPI:
    """App factory for `uvicorn apidialog.service.app:create_app_from_env`."""
    graph_dir = os.environ.get("APIDIALOG_KG")
    if not graph_dir:
        raise RuntimeError("set APIDIALOG_KG to the knowledge-graph directory")
    ttl = float(os.environ.get("APIDIALOG_SESSION_TTL", DEFAULT_TTL_SECONDS))
    return create_app(graph_dir=graph_dir, ttl_seconds=ttl)
