/** DOM rendering. Rebuilds each panel from the core state; no virtual DOM,
 * the tables involved are tiny. */

import type { MatrixStatus } from "./api.js";
import type { AppCore, Snapshot } from "./core.js";
import { checkJudgementInput } from "./fractions.js";
import { gridCells, matrixSummary } from "./gridmodel.js";
import { deltaView, heatmapCells, preferenceCells, runBadge } from "./results.js";

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) {
    node.removeChild(node.firstChild);
  }
}

export interface GridHandlers {
  onSet(key: string, row: number, col: number, value: string): void;
  onClear(key: string, row: number, col: number): void;
}

export function renderGrid(
  container: HTMLElement,
  core: AppCore,
  key: string,
  handlers: GridHandlers,
): void {
  clear(container);
  const labels = core.matrixLabels(key);
  const rows = core.matrixRows(key);
  const table = el("table", "grid");
  const head = el("tr");
  head.appendChild(el("th"));
  for (const label of labels) {
    head.appendChild(el("th", undefined, label));
  }
  table.appendChild(head);

  for (const line of gridCells(rows, labels)) {
    const tr = el("tr");
    tr.appendChild(el("th", undefined, labels[line[0].row]));
    for (const cell of line) {
      const td = el("td", `cell ${cell.kind}`);
      if (cell.kind === "editable") {
        const input = el("input") as HTMLInputElement;
        input.value = cell.text;
        input.placeholder = "·";
        input.title = "ratio row:column, e.g. 3 or 1/3; clear to mark not judged";
        input.addEventListener("change", () => {
          const text = input.value.trim();
          if (text === "") {
            handlers.onClear(key, cell.row, cell.col);
            return;
          }
          const check = checkJudgementInput(text);
          if (!check.ok) {
            markCellError(td, check.message ?? "invalid");
            return;
          }
          handlers.onSet(key, cell.row, cell.col, text);
        });
        td.appendChild(input);
      } else if (cell.kind === "mirror") {
        td.textContent = cell.text === "" ? "·" : cell.text;
        if (cell.text === "") {
          td.classList.add("blank");
          td.title = "not judged";
        } else {
          td.title = "reciprocal of the mirrored judgement (read-only)";
        }
      } else {
        td.textContent = "1";
      }
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  container.appendChild(table);
}

export function markCellError(td: HTMLElement, message: string): void {
  td.classList.add("error");
  let note = td.querySelector(".cell-error") as HTMLElement | null;
  if (!note) {
    note = el("div", "cell-error");
    td.appendChild(note);
  }
  note.textContent = message;
}

export function clearCellErrors(container: HTMLElement): void {
  for (const node of Array.from(container.querySelectorAll(".cell-error"))) {
    node.remove();
  }
  for (const node of Array.from(container.querySelectorAll(".error"))) {
    node.classList.remove("error");
  }
}

export function renderStatus(container: HTMLElement, status: MatrixStatus): void {
  clear(container);
  const summary = matrixSummary(status);
  const badge = el("span", `badge badge-${summary.badge.level}`, summary.badge.label);
  container.appendChild(badge);
  container.appendChild(
    el("span", `badge ${summary.connected ? "badge-ok" : "badge-warn"}`,
       summary.connected ? "connected" : "disconnected"),
  );
  container.appendChild(el("span", "badge", summary.judged));
  container.appendChild(el("span", "badge", `${summary.treeCount} spanning trees`));
  if (summary.ordinalViolations > 0) {
    container.appendChild(
      el("span", "badge badge-warn", `${summary.ordinalViolations} ordinal cycles`),
    );
  }
}

export function renderProblemBar(container: HTMLElement, core: AppCore): void {
  clear(container);
  container.appendChild(
    el("span", `badge ${core.draft ? "badge-warn" : "badge-ok"}`,
       core.draft ? "draft: finish connecting the graphs" : "ready to analyze"),
  );
  container.appendChild(el("span", "badge", `combination space ${core.totalSpace}`));
}

function heatColor(intensity: number): string {
  // white through deep blue-green
  const alpha = Math.min(1, Math.max(0, intensity));
  return `rgba(13, 110, 97, ${alpha.toFixed(3)})`;
}

export function renderResults(
  container: HTMLElement,
  snapshot: Snapshot,
  baseline: Snapshot | null,
): void {
  clear(container);
  const badge = runBadge(snapshot.run);
  const header = el("div", "run-header");
  header.appendChild(el("span", "badge badge-mode", badge.mode));
  header.appendChild(el("span", "run-detail", badge.detail));
  if (baseline) {
    header.appendChild(
      el("span", "badge badge-delta", `compared with ${baseline.label}`),
    );
  }
  container.appendChild(header);

  const delta = baseline ? deltaView(baseline.run, snapshot.run) : null;

  container.appendChild(el("h3", undefined, "Rank acceptability"));
  const heat = el("table", "heatmap");
  const head = el("tr");
  head.appendChild(el("th"));
  const n = snapshot.alternatives.length;
  for (let p = 1; p <= n; p++) {
    head.appendChild(el("th", undefined, `rank ${p}`));
  }
  heat.appendChild(head);
  heatmapCells(snapshot.run, snapshot.alternatives).forEach((row, i) => {
    const tr = el("tr");
    tr.appendChild(el("th", undefined, snapshot.alternatives[i]));
    row.forEach((cell, j) => {
      const td = el("td", "heat-cell");
      td.style.backgroundColor = heatColor(cell.intensity);
      td.classList.toggle("heat-dark", cell.intensity > 0.5);
      const deltaCell = delta?.rank[i][j];
      td.textContent = deltaCell ? deltaCell.label : cell.label;
      if (deltaCell?.changed) {
        td.classList.add("changed");
      }
      td.title = cell.tooltip;
      tr.appendChild(td);
    });
    heat.appendChild(tr);
  });
  container.appendChild(heat);

  container.appendChild(el("h3", undefined, "Preference probability (row beats column)"));
  const pref = el("table", "preference");
  const prefHead = el("tr");
  prefHead.appendChild(el("th"));
  for (const name of snapshot.alternatives) {
    prefHead.appendChild(el("th", undefined, name));
  }
  pref.appendChild(prefHead);
  preferenceCells(snapshot.run, snapshot.alternatives).forEach((row, i) => {
    const tr = el("tr");
    tr.appendChild(el("th", undefined, snapshot.alternatives[i]));
    row.forEach((cell, j) => {
      const td = el("td", cell.diagonal ? "diag" : "pref-cell");
      const deltaCell = !cell.diagonal && delta ? delta.preference[i][j] : null;
      td.textContent = cell.diagonal
        ? "—"
        : deltaCell
          ? deltaCell.label
          : cell.label;
      if (deltaCell?.changed) {
        td.classList.add("changed");
      }
      td.title = cell.tooltip;
      tr.appendChild(td);
    });
    pref.appendChild(tr);
  });
  container.appendChild(pref);
}

export function renderSnapshotChips(
  container: HTMLElement,
  snapshots: Snapshot[],
  selected: number,
  onSelect: (index: number) => void,
): void {
  clear(container);
  snapshots.forEach((snapshot, index) => {
    const chip = el("button", `chip ${index === selected ? "chip-active" : ""}`, snapshot.label);
    chip.addEventListener("click", () => onSelect(index));
    container.appendChild(chip);
  });
}
