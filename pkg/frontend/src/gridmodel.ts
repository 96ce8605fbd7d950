/** View model of one judgement matrix grid.
 *
 * Only the upper triangle is editable; the lower triangle renders the
 * reciprocals the service stored, read-only, so reciprocity violations are
 * impossible at the source. Blank cells mean "not judged". */

import type { Entry, MatrixStatus } from "./api.js";
import { entryText } from "./fractions.js";

export type CellKind = "diagonal" | "editable" | "mirror";

export interface GridCell {
  row: number;
  col: number;
  kind: CellKind;
  text: string;
  judged: boolean;
}

export function gridCells(rows: Entry[][], labels: string[]): GridCell[][] {
  const n = labels.length;
  const out: GridCell[][] = [];
  for (let i = 0; i < n; i++) {
    const line: GridCell[] = [];
    for (let j = 0; j < n; j++) {
      if (i === j) {
        line.push({ row: i, col: j, kind: "diagonal", text: "1", judged: true });
      } else if (i < j) {
        const value = rows[i][j];
        line.push({
          row: i,
          col: j,
          kind: "editable",
          text: entryText(value),
          judged: value !== null,
        });
      } else {
        const value = rows[i][j];
        line.push({
          row: i,
          col: j,
          kind: "mirror",
          text: value === null ? "" : entryText(value),
          judged: value !== null,
        });
      }
    }
    out.push(line);
  }
  return out;
}

export type BadgeLevel = "ok" | "warn" | "pending";

export interface CrBadge {
  level: BadgeLevel;
  label: string;
}

/** Consistency badge: warn above the conventional 0.1 threshold; pending
 * while the matrix is incomplete (CR needs every judgement). */
export function crBadge(status: MatrixStatus): CrBadge {
  if (status.consistency_ratio === null) {
    return { level: "pending", label: status.complete ? "CR n/a" : "CR needs all judgements" };
  }
  const value = status.consistency_ratio;
  return {
    level: value > 0.1 ? "warn" : "ok",
    label: `CR ${value.toFixed(2)}`,
  };
}

export interface MatrixSummary {
  key: string;
  connected: boolean;
  judged: string;
  treeCount: number;
  badge: CrBadge;
  ordinalViolations: number;
}

export function matrixSummary(status: MatrixStatus): MatrixSummary {
  const pairs = (status.size * (status.size - 1)) / 2;
  return {
    key: status.key,
    connected: status.connected,
    judged: `${status.judged_pairs}/${pairs} judged`,
    treeCount: status.tree_count,
    badge: crBadge(status),
    ordinalViolations: status.transitivity_violations.length,
  };
}
