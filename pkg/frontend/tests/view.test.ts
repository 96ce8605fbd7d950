/** DOM smoke tests for the rendering layer (happy-dom). */

import { beforeEach, describe, expect, it, vi } from "vitest";

import { Api, type ResultDocument, type SessionView } from "../src/api.js";
import { AppCore, type Snapshot } from "../src/core.js";
import { renderGrid, renderResults, renderStatus } from "../src/view.js";
import resultDoc from "./fixtures/enumerate_result.json";
import resultAfterDoc from "./fixtures/enumerate_result_after_clear.json";
import sessionView from "./fixtures/session_view.json";

const view = sessionView as unknown as SessionView;
const result = resultDoc as unknown as ResultDocument;
const resultAfter = resultAfterDoc as unknown as ResultDocument;

function coreWithSession(): AppCore {
  const core = new AppCore(new Api("", vi.fn()));
  core.session = JSON.parse(JSON.stringify(view));
  core.validation = core.session!.validation;
  return core;
}

function snapshot(run: ResultDocument, label: string): Snapshot {
  return {
    label,
    jobId: label,
    run: run.runs[0],
    alternatives: run.alternatives,
    editsBefore: 0,
  };
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("renderGrid", () => {
  it("renders editable inputs above the diagonal and mirrors below", () => {
    const container = document.createElement("div");
    const core = coreWithSession();
    renderGrid(container, core, "learning", { onSet: vi.fn(), onClear: vi.fn() });
    const rows = container.querySelectorAll("tr");
    expect(rows.length).toBe(4); // header + 3 alternatives
    expect(container.querySelectorAll("td.editable input").length).toBe(3);
    const mirror = container.querySelector("tr:nth-child(3) td.mirror");
    expect(mirror?.textContent).toBe("3");
  });

  it("fires the edit handler on change", () => {
    const container = document.createElement("div");
    const core = coreWithSession();
    const onSet = vi.fn();
    renderGrid(container, core, "learning", { onSet, onClear: vi.fn() });
    const input = container.querySelector("td.editable input") as HTMLInputElement;
    input.value = "5";
    input.dispatchEvent(new Event("change"));
    expect(onSet).toHaveBeenCalledWith("learning", 0, 1, "5");
  });

  it("rejects a negative value inline without calling the service", () => {
    const container = document.createElement("div");
    const core = coreWithSession();
    const onSet = vi.fn();
    renderGrid(container, core, "learning", { onSet, onClear: vi.fn() });
    const input = container.querySelector("td.editable input") as HTMLInputElement;
    input.value = "-2";
    input.dispatchEvent(new Event("change"));
    expect(onSet).not.toHaveBeenCalled();
    expect(container.querySelector(".cell-error")?.textContent).toMatch(/positive/);
  });
});

describe("renderStatus", () => {
  it("shows CR badge, connectivity, and tree count", () => {
    const container = document.createElement("div");
    const core = coreWithSession();
    renderStatus(container, core.statusFor("vocational_training"));
    const text = container.textContent ?? "";
    expect(text).toContain("CR 0.19");
    expect(text).toContain("connected");
    expect(text).toContain("3 spanning trees");
  });
});

describe("renderResults", () => {
  it("renders the heatmap with the mode badge and shaded cells", () => {
    const container = document.createElement("div");
    renderResults(container, snapshot(result, "run 1"), null);
    expect(container.textContent).toContain("enumerated");
    expect(container.textContent).toContain("944784");
    const cells = container.querySelectorAll("table.heatmap td");
    expect(cells.length).toBe(9);
    const last = cells[8] as HTMLElement;
    expect(last.textContent).toBe("0.80");
    expect(last.style.backgroundColor).not.toBe("");
    expect(container.textContent).toContain("0.51 (483246)");
  });

  it("marks moved cells in the delta view", () => {
    const container = document.createElement("div");
    renderResults(container, snapshot(resultAfter, "run 2"), snapshot(result, "run 1"));
    expect(container.textContent).toContain("compared with run 1");
    const changed = container.querySelectorAll("td.changed");
    expect(changed.length).toBeGreaterThan(0);
  });
});
