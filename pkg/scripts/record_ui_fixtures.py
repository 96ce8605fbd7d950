#!/usr/bin/env python3
"""Record real service responses as fixtures for the frontend test suite.

Drives the HTTP service through the whole UI loop — create a blank draft
problem, fill in the school judgements cell by cell, run an enumeration,
clear one judgement, run again — and writes every exchange (request and
response) to frontend/tests/fixtures/.  The frontend tests replay these
against a fake fetch, so every number the UI asserts is one the service
actually produced.
"""

import json
import time
from pathlib import Path

from fastapi.testclient import TestClient

from spanrank.datasets import school_document
from spanrank.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"


class Recorder:
    def __init__(self, client: TestClient):
        self.client = client
        self.exchanges = []

    def call(self, method: str, path: str, body=None):
        response = self.client.request(method, path, json=body)
        payload = response.json()
        self.exchanges.append(
            {
                "method": method,
                "path": path,
                "body": body,
                "status": response.status_code,
                "response": payload,
            }
        )
        return payload


def blank_school_document() -> dict:
    doc = school_document()
    for rows in list(doc["matrices"].values()) + [doc["weights"]]:
        n = len(rows)
        for i in range(n):
            for j in range(n):
                if i != j:
                    rows[i][j] = None
    return doc


def wait_done(recorder: Recorder, session: str, job: str) -> None:
    # wait off the record, then record the single terminal status the
    # replaying client will observe (its poll count need not match ours)
    for _ in range(600):
        status = recorder.client.get(f"/sessions/{session}/jobs/{job}").json()
        if status["status"] in ("done", "failed"):
            assert status["status"] == "done", status
            recorder.call("GET", f"/sessions/{session}/jobs/{job}")
            return
        time.sleep(0.1)
    raise AssertionError("job did not finish")


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    app = create_app(data_dir="/tmp/spanrank-fixture-sessions-ui")
    client = TestClient(app)
    recorder = Recorder(client)
    school = school_document()

    created = recorder.call("POST", "/sessions", blank_school_document())
    session = created["id"]
    assert created["validation"]["draft"] is True

    # fill the grid: every upper-triangle judgement, criteria then weights
    for key in school["criteria"] + ["weights"]:
        rows = school["weights"] if key == "weights" else school["matrices"][key]
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                recorder.call(
                    "PUT",
                    f"/sessions/{session}/matrices/{key}/entries/{i}/{j}",
                    {"value": rows[i][j]},
                )

    job = recorder.call("POST", f"/sessions/{session}/jobs", {"mode": "enumerate"})["job"]
    wait_done(recorder, session, job)
    result = recorder.call("GET", f"/sessions/{session}/results/{job}")
    assert result["runs"][0]["total_space"] == "944784"

    # clear one weight judgement and analyze again
    recorder.call("DELETE", f"/sessions/{session}/matrices/weights/entries/1/2")
    job2 = recorder.call("POST", f"/sessions/{session}/jobs", {"mode": "enumerate"})["job"]
    wait_done(recorder, session, job2)
    result2 = recorder.call("GET", f"/sessions/{session}/results/{job2}")
    assert result2["runs"][0]["total_space"] == "629856"

    (FIXTURES / "ui_loop_exchanges.json").write_text(
        json.dumps({"exchanges": recorder.exchanges}, indent=2, sort_keys=True) + "\n"
    )

    # standalone documents for the view-model unit tests
    (FIXTURES / "enumerate_result.json").write_text(json.dumps(result, indent=2, sort_keys=True) + "\n")
    (FIXTURES / "enumerate_result_after_clear.json").write_text(
        json.dumps(result2, indent=2, sort_keys=True) + "\n"
    )
    view = recorder.client.get(f"/sessions/{session}").json()
    (FIXTURES / "session_view.json").write_text(json.dumps(view, indent=2, sort_keys=True) + "\n")

    print(f"recorded {len(recorder.exchanges)} exchanges")
    print("C rank-3:", result["runs"][0]["rank_probabilities"][2][2],
          "->", result2["runs"][0]["rank_probabilities"][2][2])


if __name__ == "__main__":
    main()
