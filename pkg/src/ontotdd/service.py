"""Session-holding HTTP facade for the interactive authoring loop.

One session = one classified ontology snapshot plus an ordered list of
pending test axioms.  Evaluations read the shared snapshot; a commit adds
the selected axioms, reclassifies exactly once, and resets the verdicts of
everything still pending.
"""
from __future__ import annotations

import os
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from .core import Axiom, TestResult
from . import engine, reasoner
from .parser import ParseError, parse_ontology, parse_test_axiom, print_ontology
from .suite import result_to_json

DEFAULT_EVICTION_SECONDS = 30 * 60


@dataclass
class PendingEntry:
    text: str
    axiom: Axiom | None
    parse_error: dict | None
    result: TestResult | None = None  # None = unevaluated


@dataclass
class Session:
    id: str
    state: reasoner.OntologyState
    pending: list[PendingEntry] = field(default_factory=list)
    classify_count: int = 0
    generation: int = 0
    last_access: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)


def _parse_error_json(err: ParseError) -> dict:
    return {"line": err.line, "column": err.column, "message": err.message, "kind": err.kind}


def _status_json(state: reasoner.OntologyState) -> dict:
    index = state.index
    return {
        "consistent": index.consistent,
        "coherent": index.coherent,
        "unsatisfiable": sorted(index.unsatisfiable_named),
    }


class PendingBody(BaseModel):
    text: str


class EvaluateBody(BaseModel):
    positions: list[int] | None = None  # None evaluates everything


class CommitBody(BaseModel):
    positions: list[int]


def create_app(
    node_budget: int = reasoner.DEFAULT_NODE_BUDGET,
    eviction_seconds: float = DEFAULT_EVICTION_SECONDS,
    frontend_dir: str | os.PathLike | None = None,
) -> FastAPI:
    app = FastAPI(title="ontotdd service")
    sessions: dict[str, Session] = {}
    store_lock = threading.Lock()

    def _get(session_id: str) -> Session:
        now = time.monotonic()
        with store_lock:
            for sid in [s for s, sess in sessions.items() if now - sess.last_access > eviction_seconds]:
                del sessions[sid]
            session = sessions.get(session_id)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session")
            session.last_access = now
            return session

    @app.post("/sessions")
    async def create_session(request: Request):
        text = (await request.body()).decode("utf-8")
        try:
            axioms, sig = parse_ontology(text)
        except ParseError as err:
            raise HTTPException(status_code=400, detail=_parse_error_json(err))
        try:
            state = reasoner.classify(reasoner.make_state(axioms, sig, node_budget))
        except reasoner.ResourceBudgetExceeded as err:
            raise HTTPException(status_code=422, detail=str(err))
        session = Session(id=uuid.uuid4().hex, state=state, classify_count=1)
        with store_lock:
            sessions[session.id] = session
        return {"id": session.id, **_status_json(state)}

    @app.get("/sessions/{session_id}/signature")
    def get_signature(session_id: str):
        session = _get(session_id)
        sig = session.state.signature
        return {
            "classes": sorted(sig.classes),
            "roles": sorted(sig.roles),
            "individuals": sorted(sig.individuals),
        }

    @app.post("/sessions/{session_id}/pending")
    def add_pending(session_id: str, body: PendingBody):
        session = _get(session_id)
        with session.lock:
            try:
                entry = PendingEntry(body.text, parse_test_axiom(body.text, session.state.signature), None)
            except ParseError as err:
                entry = PendingEntry(body.text, None, _parse_error_json(err))
            session.pending.append(entry)
            position = len(session.pending) - 1
        payload = {"position": position}
        if entry.parse_error is not None:
            payload["parseError"] = entry.parse_error
        return payload

    @app.post("/sessions/{session_id}/evaluate")
    def evaluate_pending(session_id: str, body: EvaluateBody | None = None):
        session = _get(session_id)
        with session.lock:
            positions = body.positions if body and body.positions is not None else list(range(len(session.pending)))
            if any(p < 0 or p >= len(session.pending) for p in positions):
                raise HTTPException(status_code=400, detail="position out of range")
            state = session.state
            generation = session.generation
            entries = [(p, session.pending[p]) for p in positions]

        results = []
        for position, entry in entries:
            if entry.axiom is None:
                results.append({"position": position, "result": None, "parseError": entry.parse_error})
                continue
            try:
                result = engine.evaluate(state, entry.axiom)
                payload = result_to_json(result)
            except reasoner.ResourceBudgetExceeded as err:
                result, payload = None, result_to_json(None, error=str(err))
            results.append({"position": position, "result": payload})
            with session.lock:
                if session.generation == generation:  # drop stale writes after a commit
                    entry.result = result
        return results

    @app.post("/sessions/{session_id}/commit")
    def commit_pending(session_id: str, body: CommitBody):
        session = _get(session_id)
        with session.lock:
            positions = body.positions
            if any(p < 0 or p >= len(session.pending) for p in positions):
                raise HTTPException(status_code=400, detail="position out of range")
            selected = [session.pending[p] for p in positions]
            if any(e.axiom is None for e in selected):
                raise HTTPException(status_code=409, detail="selection contains unparsed entries")
            if selected:
                state = reasoner.add_axioms(session.state, [e.axiom for e in selected])
                try:
                    session.state = reasoner.classify(state)
                except reasoner.ResourceBudgetExceeded as err:
                    raise HTTPException(status_code=422, detail=str(err))
                session.classify_count += 1
                keep = [e for i, e in enumerate(session.pending) if i not in set(positions)]
                for entry in keep:
                    entry.result = None  # verdicts may have changed; back to unevaluated
                session.pending = keep
                session.generation += 1
            return _status_json(session.state)

    @app.get("/sessions/{session_id}/pending")
    def list_pending(session_id: str):
        session = _get(session_id)
        with session.lock:
            return [
                {
                    "position": i,
                    "text": e.text,
                    "parseError": e.parse_error,
                    "result": result_to_json(e.result) if e.result is not None else None,
                }
                for i, e in enumerate(session.pending)
            ]

    @app.get("/sessions/{session_id}/export")
    def export_ontology(session_id: str):
        session = _get(session_id)
        return PlainTextResponse(print_ontology(list(session.state.axioms), session.state.signature))

    @app.get("/sessions/{session_id}/diag")
    def diagnostics(session_id: str):
        session = _get(session_id)
        return {"classifyCount": session.classify_count}

    static_dir = Path(frontend_dir) if frontend_dir else _default_frontend_dir()
    if static_dir is not None and static_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app


def _default_frontend_dir() -> Path | None:
    env = os.environ.get("ONTOTDD_FRONTEND")
    if env:
        return Path(env)
    candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return candidate if candidate.is_dir() else None
