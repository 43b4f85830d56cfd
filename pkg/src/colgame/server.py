"""HTTP session API over the session module.

Endpoints (all JSON):
  POST   /sessions            {formula|tree|fixture, interp?, budget?, strategy?} -> {id}
  GET    /sessions/{id}       full session state payload
  POST   /sessions/{id}/moves {label} or {stop: true} -> updated payload
  DELETE /sessions/{id}       {ok: true}
  GET    /fixtures            bundled fixture listing

Errors: 400 bad request, 404 unknown session, 409 illegal move or
finished session, each as {"error": message}.

Handlers are plain sync functions, so solver work for new sessions runs
on the server's worker threads, off the event loop.
"""

from __future__ import annotations

import json
import uuid
from pathlib import Path
from typing import Optional

from fastapi import Body, FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .errors import ColError, IllegalMoveError
from .fixtures import FIXTURES
from .session import Session, create_session


class SessionStore:
    """Live sessions plus an optional replay journal on disk.

    The journal records each session's create payload and accepted moves;
    loading it replays them through the deterministic session logic, so a
    restarted server reproduces identical session states.
    """

    def __init__(self, persist: Optional[str] = None):
        self.sessions: dict[str, Session] = {}
        self.journal: dict[str, dict] = {}
        self.persist = Path(persist) if persist else None
        if self.persist and self.persist.exists():
            self.journal = json.loads(self.persist.read_text())
            for sid, entry in self.journal.items():
                session = create_session(entry["create"])
                for move in entry["moves"]:
                    session.step(label=move.get("label"), stop=bool(move.get("stop")))
                self.sessions[sid] = session

    def _flush(self) -> None:
        if self.persist:
            self.persist.write_text(json.dumps(self.journal, indent=1))

    def create(self, request: dict) -> str:
        session = create_session(request)
        sid = uuid.uuid4().hex[:12]
        self.sessions[sid] = session
        self.journal[sid] = {"create": request, "moves": []}
        self._flush()
        return sid

    def step(self, sid: str, move: dict) -> Session:
        session = self.sessions[sid]
        session.step(label=move.get("label"), stop=bool(move.get("stop")))
        self.journal[sid]["moves"].append(move)
        self._flush()
        return session

    def delete(self, sid: str) -> None:
        del self.sessions[sid]
        self.journal.pop(sid, None)
        self._flush()


def create_app(persist: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="colgame session API", version="0.1.0")
    # the browser frontend is served as static files from another origin
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])
    store = SessionStore(persist)
    app.state.store = store

    def error(status: int, exc: Exception) -> JSONResponse:
        return JSONResponse({"error": str(exc)}, status_code=status)

    @app.post("/sessions")
    def post_session(payload: dict = Body(...)):
        try:
            sid = store.create(payload)
        except ColError as exc:
            return error(400, exc)
        return {"id": sid, **store.sessions[sid].payload()}

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        if sid not in store.sessions:
            return error(404, KeyError(f"no session {sid}"))
        return {"id": sid, **store.sessions[sid].payload()}

    @app.post("/sessions/{sid}/moves")
    def post_move(sid: str, payload: dict = Body(...)):
        if sid not in store.sessions:
            return error(404, KeyError(f"no session {sid}"))
        has_label = isinstance(payload.get("label"), str)
        has_stop = payload.get("stop") is True
        if not isinstance(payload, dict) or has_label == has_stop:
            return error(400, ColError("move payload needs a label or stop:true, not both"))
        try:
            session = store.step(sid, payload)
        except IllegalMoveError as exc:
            return error(409, exc)
        return {"id": sid, **session.payload()}

    @app.delete("/sessions/{sid}")
    def delete_session(sid: str):
        if sid not in store.sessions:
            return error(404, KeyError(f"no session {sid}"))
        store.delete(sid)
        return {"ok": True}

    @app.get("/fixtures")
    def get_fixtures():
        return [
            {
                "name": spec.name,
                "kind": spec.kind,
                "source": spec.source,
                "budget": spec.budget,
                "defaultStrategy": spec.default_strategy,
                "note": spec.note,
            }
            for spec in FIXTURES.values()
        ]

    return app


def run(port: int = 8000, persist: Optional[str] = None) -> None:
    import uvicorn

    uvicorn.run(create_app(persist), host="127.0.0.1", port=port, log_level="warning")
