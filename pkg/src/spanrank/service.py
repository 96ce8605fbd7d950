"""HTTP facade for the companion UI: sessions, judgement edits, analysis jobs.

Sessions live as one JSON document each in a flat directory, so the service
restarts without losing anything and deploys with zero extra dependencies.
A session holds a problem that may still be a draft (disconnected comparison
graph); edits mirror reciprocals automatically and return fresh validation
state so the client can show consistency and tree-count feedback live.

Endpoints:
    POST   /sessions
    GET    /sessions/{id}
    PUT    /sessions/{id}/matrices/{key}/entries/{r}/{c}
    DELETE /sessions/{id}/matrices/{key}/entries/{r}/{c}
    POST   /sessions/{id}/jobs
    GET    /sessions/{id}/jobs/{jobId}
    GET    /sessions/{id}/results/{jobId}

Built UI assets, when present, are served statically at /.
"""

from __future__ import annotations

import json
import threading
import uuid
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import __version__
from .acceptability import (
    DEFAULT_SPACE_CAP,
    acceptability_enumerate,
    acceptability_sample,
)
from .errors import InvalidDocument, SpanrankError
from .pcm import PairwiseMatrix, Problem, as_ratio
from .problemio import (
    WEIGHTS_KEY,
    entry_json,
    parse_components,
    problem_statuses,
    result_entry,
    serialize_document,
)
from .sampling import SamplePlan


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class Session:
    """In-memory view of one session document, guarded by a single lock."""

    def __init__(self, data: dict):
        self.data = data
        self.lock = threading.Lock()

    @property
    def id(self) -> str:
        return self.data["id"]


class SessionStore:
    """Flat directory of session documents, one JSON file per session."""

    def __init__(self, directory: Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, Session] = {}
        self._store_lock = threading.Lock()
        for path in sorted(self.directory.glob("*.json")):
            with open(path, encoding="utf-8") as handle:
                data = json.load(handle)
            self._sessions[data["id"]] = Session(data)

    def create(self, data: dict) -> Session:
        session = Session(data)
        with self._store_lock:
            self._sessions[session.id] = session
        self.persist(session)
        return session

    def get(self, session_id: str) -> Session:
        session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
        return session

    def persist(self, session: Session) -> None:
        path = self.directory / f"{session.id}.json"
        tmp = path.with_suffix(".json.tmp")
        tmp.write_text(
            json.dumps(session.data, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        tmp.replace(path)


class JobRunner:
    """Background analysis jobs; one live job per session."""

    def __init__(self, store: SessionStore, max_workers: int = 2):
        self.store = store
        self.executor = ThreadPoolExecutor(max_workers=max_workers)
        self.progress: dict[str, float] = {}
        self.live: set[str] = set()

    def submit(self, session: Session, job_id: str, problem: Problem, spec: dict) -> None:
        self.live.add(job_id)
        self.progress[job_id] = 0.0
        self.executor.submit(self._run, session, job_id, problem, spec)

    def _run(self, session: Session, job_id: str, problem: Problem, spec: dict) -> None:
        def on_progress(fraction: float) -> None:
            self.progress[job_id] = fraction

        try:
            mode = spec["mode"]
            if mode == "enumerate":
                result = acceptability_enumerate(
                    problem, cap=spec["cap"], progress=on_progress
                )
            else:
                result = acceptability_sample(
                    problem, spec["plan"], progress=on_progress
                )
            entry = result_entry(result)
            with session.lock:
                job = session.data["jobs"][job_id]
                job["status"] = "done"
                job["finished"] = _now()
                session.data["results"][job_id] = {
                    "toolkit_version": __version__,
                    "problem_digest": result.problem_digest,
                    "alternatives": list(result.alternatives),
                    "runs": [entry],
                }
                self.store.persist(session)
        except Exception as exc:  # surface the failure to the client
            with session.lock:
                job = session.data["jobs"][job_id]
                job["status"] = "failed"
                job["error"] = str(exc)
                job["finished"] = _now()
                self.store.persist(session)
        finally:
            self.live.discard(job_id)
            self.progress.pop(job_id, None)


class EntryPayload(BaseModel):
    value: float | int | str


class JobPayload(BaseModel):
    mode: str = "auto"
    accuracy: float | str = "0.01"
    confidence: float | str = "99"
    z: float | str | None = None
    iterations: int | None = None
    seed: int = 0
    cap: int = DEFAULT_SPACE_CAP


def _parse_session_matrices(
    doc: dict,
) -> tuple[tuple[str, ...], tuple[str, ...], dict[str, PairwiseMatrix], PairwiseMatrix]:
    return parse_components(doc, require_connected=False)


def _validation_state(doc: dict) -> dict:
    alternatives, criteria, matrices, weight_matrix = _parse_session_matrices(doc)
    statuses, total_space = problem_statuses(criteria, matrices, weight_matrix)
    draft_reasons = [
        {"code": "DisconnectedGraph", "location": f"matrices.{s.key}"
         if s.key != WEIGHTS_KEY else WEIGHTS_KEY,
         "detail": f"comparison graph of {s.key!r} is disconnected"}
        for s in statuses
        if not s.connected
    ]
    return {
        "draft": bool(draft_reasons),
        "violations": draft_reasons,
        "matrices": [s.to_json() for s in statuses],
        "total_space": str(total_space),
    }


def _problem_from_doc(doc: dict) -> Problem:
    alternatives, criteria, matrices, weight_matrix = parse_components(doc)
    return Problem(
        alternatives=alternatives,
        criteria=criteria,
        criterion_matrices=tuple(matrices[name] for name in criteria),
        weight_matrix=weight_matrix,
    )


def _session_view(session: Session) -> dict:
    data = session.data
    return {
        "id": data["id"],
        "created": data["created"],
        "problem": data["problem"],
        "validation": _validation_state(data["problem"]),
        "jobs": {job_id: dict(job) for job_id, job in data["jobs"].items()},
        "results": sorted(data["results"]),
        "history_length": len(data["history"]),
    }


def create_app(data_dir: Path | str = "./spanrank-sessions", ui_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="spanrank service", version=__version__)
    store = SessionStore(Path(data_dir))
    runner = JobRunner(store)

    @app.post("/sessions", status_code=201)
    def create_session(problem: dict):
        try:
            _parse_session_matrices(problem)
        except InvalidDocument as exc:
            raise HTTPException(status_code=400, detail={"violations": exc.violations})
        session = store.create(
            {
                "id": uuid.uuid4().hex[:12],
                "created": _now(),
                "problem": problem,
                "history": [],
                "jobs": {},
                "results": {},
            }
        )
        return {"id": session.id, "validation": _validation_state(session.data["problem"])}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return _session_view(session)

    def _matrix_rows_for(doc: dict, key: str) -> list:
        if key == WEIGHTS_KEY:
            return doc["weights"]
        if key not in doc["matrices"]:
            raise HTTPException(status_code=404, detail=f"unknown matrix {key!r}")
        return doc["matrices"][key]

    def _edit(session_id: str, key: str, row: int, col: int, value) -> dict:
        session = store.get(session_id)
        with session.lock:
            doc = session.data["problem"]
            rows = _matrix_rows_for(doc, key)
            size = len(rows)
            if not (0 <= row < size and 0 <= col < size):
                raise HTTPException(
                    status_code=422,
                    detail=f"indices ({row}, {col}) out of range for a {size}x{size} matrix",
                )
            if row == col:
                raise HTTPException(
                    status_code=422,
                    detail="diagonal judgements are fixed at 1 and cannot be edited",
                )
            if value is None:
                rows[row][col] = None
                rows[col][row] = None
            else:
                try:
                    ratio = as_ratio(value)
                except SpanrankError as exc:
                    raise HTTPException(status_code=422, detail=str(exc))
                rows[row][col] = entry_json(ratio)
                rows[col][row] = entry_json(1 / ratio)
            session.data["history"].append(
                {
                    "at": _now(),
                    "matrix": key,
                    "row": row,
                    "col": col,
                    "value": rows[row][col],
                }
            )
            state = _validation_state(doc)
            # echo the judgement pair as stored, so clients can mirror the
            # reciprocal without refetching the whole session
            state["entry"] = {
                "matrix": key,
                "row": row,
                "col": col,
                "value": rows[row][col],
                "reciprocal": rows[col][row],
            }
            store.persist(session)
            return state

    @app.put("/sessions/{session_id}/matrices/{key}/entries/{row}/{col}")
    def set_entry(session_id: str, key: str, row: int, col: int, payload: EntryPayload):
        return _edit(session_id, key, row, col, payload.value)

    @app.delete("/sessions/{session_id}/matrices/{key}/entries/{row}/{col}")
    def clear_entry(session_id: str, key: str, row: int, col: int):
        return _edit(session_id, key, row, col, None)

    @app.post("/sessions/{session_id}/jobs", status_code=202)
    def start_job(session_id: str, payload: JobPayload):
        session = store.get(session_id)
        with session.lock:
            state = _validation_state(session.data["problem"])
            if state["draft"]:
                raise HTTPException(
                    status_code=409,
                    detail={"reason": "draft problem", "violations": state["violations"]},
                )
            for job_id, job in session.data["jobs"].items():
                if job["status"] in ("queued", "running") and job_id in runner.live:
                    raise HTTPException(
                        status_code=409,
                        detail={"reason": "job already running", "job": job_id},
                    )
            problem = _problem_from_doc(session.data["problem"])
            mode = payload.mode
            if mode == "auto":
                from .acceptability import combination_space

                mode = "enumerate" if combination_space(problem) <= payload.cap else "sample"
            if mode not in ("enumerate", "sample"):
                raise HTTPException(status_code=422, detail=f"unknown mode {payload.mode!r}")
            spec: dict = {"mode": mode, "cap": payload.cap}
            if mode == "sample":
                try:
                    plan = SamplePlan.create(
                        accuracy=payload.accuracy,
                        confidence=payload.confidence,
                        z_override=payload.z,
                        iterations=payload.iterations,
                        seed=payload.seed,
                    )
                except (SpanrankError, ValueError) as exc:
                    raise HTTPException(status_code=422, detail=str(exc))
                if plan.iterations < 1:
                    raise HTTPException(status_code=422, detail="plan has zero iterations")
                spec["plan"] = plan
            job_id = uuid.uuid4().hex[:12]
            session.data["jobs"][job_id] = {
                "status": "running",
                "mode": mode,
                "submitted": _now(),
                "plan": None
                if mode == "enumerate"
                else {
                    "accuracy": str(spec["plan"].accuracy),
                    "confidence": str(spec["plan"].confidence),
                    "iterations": spec["plan"].iterations,
                    "seed": spec["plan"].seed,
                },
            }
            store.persist(session)
        runner.submit(session, job_id, problem, spec)
        return {"job": job_id}

    @app.get("/sessions/{session_id}/jobs/{job_id}")
    def job_status(session_id: str, job_id: str):
        session = store.get(session_id)
        with session.lock:
            job = session.data["jobs"].get(job_id)
            if job is None:
                raise HTTPException(status_code=404, detail=f"unknown job {job_id!r}")
            view = dict(job)
            if job["status"] == "running":
                if job_id in runner.live:
                    view["progress"] = runner.progress.get(job_id, 0.0)
                else:
                    # the service restarted while this job was in flight
                    job["status"] = "failed"
                    job["error"] = "interrupted by service restart"
                    view = dict(job)
                    store.persist(session)
            elif job["status"] == "done":
                view["progress"] = 1.0
                view["result_url"] = f"/sessions/{session_id}/results/{job_id}"
            return view

    @app.get("/sessions/{session_id}/results/{job_id}")
    def job_result(session_id: str, job_id: str):
        session = store.get(session_id)
        with session.lock:
            result = session.data["results"].get(job_id)
            if result is None:
                raise HTTPException(status_code=404, detail=f"no result for job {job_id!r}")
            return Response(
                content=serialize_document(result), media_type="application/json"
            )

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


