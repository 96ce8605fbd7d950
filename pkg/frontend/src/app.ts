/** Entry point: wires the core to the page. */

import { Api, ApiError } from "./api.js";
import { AppCore, blankProblem } from "./core.js";
import { schoolExample } from "./example.js";
import {
  clear,
  clearCellErrors,
  el,
  renderGrid,
  renderProblemBar,
  renderResults,
  renderSnapshotChips,
  renderStatus,
} from "./view.js";

const api = new Api("");
const core = new AppCore(api);

let activeMatrix = "";
let selectedSnapshot = -1;
let compareWithPrevious = true;

function byId(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node;
}

function setMessage(text: string, isError = false): void {
  const box = byId("message");
  box.textContent = text;
  box.className = isError ? "message error" : "message";
}

function describeError(error: unknown): string {
  if (error instanceof ApiError) {
    if (error.violations.length) {
      return error.violations.map((v) => `${v.location}: ${v.detail}`).join("; ");
    }
    return typeof error.detail === "string" ? error.detail : JSON.stringify(error.detail);
  }
  return String(error);
}

function renderAll(): void {
  if (!core.session) {
    byId("workspace").hidden = true;
    return;
  }
  byId("workspace").hidden = false;
  byId("session-label").textContent = `session ${core.session.id}`;
  window.location.hash = `#/s/${core.session.id}`;

  renderProblemBar(byId("problem-bar"), core);
  renderTabs();
  renderGrid(byId("grid"), core, activeMatrix, {
    onSet: (key, row, col, value) => void applyEdit(() => core.setJudgement(key, row, col, value)),
    onClear: (key, row, col) => void applyEdit(() => core.clearJudgement(key, row, col)),
  });
  renderStatus(byId("matrix-status"), core.statusFor(activeMatrix));
  renderRunState();
  renderSnapshotsAndResults();
}

function renderTabs(): void {
  const tabs = byId("matrix-tabs");
  clear(tabs);
  for (const key of core.matrixKeys()) {
    const status = core.statusFor(key);
    const label = key === "weights" ? "criteria weights" : key;
    const button = el(
      "button",
      `tab ${key === activeMatrix ? "tab-active" : ""} ${status.connected ? "" : "tab-warn"}`,
      label,
    );
    button.addEventListener("click", () => {
      activeMatrix = key;
      renderAll();
    });
    tabs.appendChild(button);
  }
}

async function applyEdit(action: () => Promise<unknown>): Promise<void> {
  clearCellErrors(byId("grid"));
  try {
    await action();
    setMessage("");
  } catch (error) {
    setMessage(describeError(error), true);
  }
  renderAll();
}

function renderRunState(): void {
  const button = byId("run-button") as HTMLButtonElement;
  const progress = byId("job-progress") as HTMLProgressElement;
  const job = core.activeJob;
  button.disabled = core.draft || job !== null;
  button.title = core.draft ? "finish connecting every comparison graph first" : "";
  progress.hidden = job === null;
  if (job) {
    progress.value = job.progress;
  }
}

function renderSnapshotsAndResults(): void {
  const chips = byId("snapshot-chips");
  const results = byId("results");
  if (core.snapshots.length === 0) {
    clear(chips);
    clear(results);
    results.appendChild(el("p", "placeholder", "run an analysis to see rank acceptabilities"));
    return;
  }
  if (selectedSnapshot < 0 || selectedSnapshot >= core.snapshots.length) {
    selectedSnapshot = core.snapshots.length - 1;
  }
  renderSnapshotChips(chips, core.snapshots, selectedSnapshot, (index) => {
    selectedSnapshot = index;
    renderAll();
  });
  const snapshot = core.snapshots[selectedSnapshot];
  const baseline =
    compareWithPrevious && selectedSnapshot > 0 ? core.snapshots[selectedSnapshot - 1] : null;
  renderResults(results, snapshot, baseline);
}

async function runAnalysis(): Promise<void> {
  const mode = (byId("mode-select") as HTMLSelectElement).value as
    | "auto"
    | "enumerate"
    | "sample";
  const request: Parameters<typeof core.runAnalysis>[0] = { mode };
  if (mode === "sample") {
    request.accuracy = (byId("accuracy-input") as HTMLInputElement).value || "0.01";
    request.confidence = (byId("confidence-input") as HTMLInputElement).value || "99";
    const iterations = (byId("iterations-input") as HTMLInputElement).value;
    if (iterations) {
      request.iterations = Number(iterations);
    }
    request.seed = Number((byId("seed-input") as HTMLInputElement).value || "0");
  }
  setMessage("analysis running…");
  const ticker = setInterval(renderRunState, 250);
  try {
    await core.runAnalysis(request);
    selectedSnapshot = core.snapshots.length - 1;
    setMessage("");
  } catch (error) {
    setMessage(describeError(error), true);
  } finally {
    clearInterval(ticker);
  }
  renderAll();
}

async function bootstrap(action: () => Promise<void>): Promise<void> {
  try {
    await action();
    activeMatrix = core.matrixKeys()[0];
    selectedSnapshot = -1;
    setMessage("");
  } catch (error) {
    setMessage(describeError(error), true);
  }
  renderAll();
}

function wire(): void {
  byId("load-example").addEventListener("click", () =>
    void bootstrap(() => core.createSession(schoolExample())),
  );
  byId("new-problem").addEventListener("click", () => {
    const alternatives = prompt("alternative names, comma separated", "A, B, C");
    if (!alternatives) {
      return;
    }
    const criteria = prompt("criterion names, comma separated", "price, quality");
    if (!criteria) {
      return;
    }
    const split = (text: string) => text.split(",").map((s) => s.trim()).filter(Boolean);
    void bootstrap(() => core.createSession(blankProblem(split(alternatives), split(criteria))));
  });
  byId("open-session").addEventListener("click", () => {
    const id = prompt("session id");
    if (id) {
      void bootstrap(() => core.loadSession(id.trim()));
    }
  });
  byId("run-button").addEventListener("click", () => void runAnalysis());
  (byId("mode-select") as HTMLSelectElement).addEventListener("change", () => {
    byId("sample-options").hidden = (byId("mode-select") as HTMLSelectElement).value !== "sample";
  });
  (byId("compare-toggle") as HTMLInputElement).addEventListener("change", (event) => {
    compareWithPrevious = (event.target as HTMLInputElement).checked;
    renderAll();
  });

  const match = window.location.hash.match(/^#\/s\/(\w+)/);
  if (match) {
    void bootstrap(() => core.loadSession(match[1]));
  }
}

wire();
