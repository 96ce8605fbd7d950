/** View models for analysis results: rank-acceptability heatmap, preference
 * matrix, and snapshot deltas. Probabilities and counts come verbatim from
 * the service result document. */

import type { RunEntry } from "./api.js";

export interface RunBadge {
  mode: string;
  detail: string;
}

/** Every displayed probability is tagged with how it was produced: the mode,
 * and for sampled runs the full plan (accuracy, confidence, iterations,
 * seed). */
export function runBadge(run: RunEntry): RunBadge {
  if (run.mode === "enumerated") {
    return {
      mode: "enumerated",
      detail: `all ${run.total_space} combinations`,
    };
  }
  const plan = run.plan;
  const detail = plan
    ? `λ=${plan.accuracy} C=${plan.confidence}% iterations=${plan.iterations} seed=${plan.seed}`
    : `${run.combinations_evaluated} iterations`;
  return { mode: "sampled", detail };
}

export interface HeatmapCell {
  alternative: string;
  rank: number;
  probability: number;
  count: number;
  intensity: number; // 0..1 for cell shading
  label: string;
  tooltip: string;
}

export function heatmapCells(run: RunEntry, alternatives: string[]): HeatmapCell[][] {
  const probabilities = run.rank_probabilities;
  if (!probabilities) {
    return [];
  }
  return alternatives.map((name, i) =>
    probabilities[i].map((p, rankIndex) => ({
      alternative: name,
      rank: rankIndex + 1,
      probability: p,
      count: run.rank_counts[i][rankIndex],
      intensity: p,
      label: p.toFixed(2),
      tooltip:
        run.mode === "enumerated"
          ? `${name} at rank ${rankIndex + 1}: ${p.toFixed(6)} (${run.rank_counts[i][rankIndex]} combinations)`
          : `${name} at rank ${rankIndex + 1}: ${p.toFixed(6)}`,
    })),
  );
}

export interface PreferenceCell {
  row: string;
  col: string;
  diagonal: boolean;
  probability: number | null;
  count: number | null;
  label: string;
  tooltip: string;
}

export function preferenceCells(run: RunEntry, alternatives: string[]): PreferenceCell[][] {
  const probabilities = run.preference_probabilities;
  if (!probabilities) {
    return [];
  }
  return alternatives.map((rowName, i) =>
    alternatives.map((colName, j) => {
      if (i === j) {
        return {
          row: rowName,
          col: colName,
          diagonal: true,
          probability: null,
          count: null,
          label: "—",
          tooltip: "",
        };
      }
      const p = probabilities[i][j];
      const count = run.preference_counts[i][j];
      return {
        row: rowName,
        col: colName,
        diagonal: false,
        probability: p,
        count,
        label: run.mode === "enumerated" ? `${p.toFixed(2)} (${count})` : p.toFixed(2),
        tooltip: `${rowName} beats ${colName}: ${p.toFixed(6)}`,
      };
    }),
  );
}

export interface DeltaCell {
  before: number;
  after: number;
  delta: number;
  changed: boolean;
  label: string;
}

const DELTA_EPSILON = 5e-7; // probabilities are serialized at 6 decimals

function deltaCell(before: number, after: number): DeltaCell {
  const delta = after - before;
  const changed = Math.abs(delta) > DELTA_EPSILON;
  const sign = delta > 0 ? "+" : "";
  return {
    before,
    after,
    delta,
    changed,
    label: changed ? `${after.toFixed(2)} (${sign}${delta.toFixed(3)})` : after.toFixed(2),
  };
}

export interface DeltaView {
  rank: DeltaCell[][];
  preference: DeltaCell[][];
  changedCells: number;
}

/** Cell-by-cell comparison of two runs of the same problem shape, used to
 * show how an edit moved the probabilities. */
export function deltaView(before: RunEntry, after: RunEntry): DeltaView {
  const rankBefore = before.rank_probabilities ?? [];
  const rankAfter = after.rank_probabilities ?? [];
  const prefBefore = before.preference_probabilities ?? [];
  const prefAfter = after.preference_probabilities ?? [];
  const rank = rankAfter.map((row, i) => row.map((p, j) => deltaCell(rankBefore[i][j], p)));
  const preference = prefAfter.map((row, i) =>
    row.map((p, j) => deltaCell(prefBefore[i][j], p)),
  );
  let changedCells = 0;
  for (const rows of [rank, preference]) {
    for (const row of rows) {
      for (const cell of row) {
        if (cell.changed) {
          changedCells += 1;
        }
      }
    }
  }
  return { rank, preference, changedCells };
}
