import { describe, expect, it } from "vitest";

import type { ResultDocument, RunEntry } from "../src/api.js";
import { deltaView, heatmapCells, preferenceCells, runBadge } from "../src/results.js";
import resultDoc from "./fixtures/enumerate_result.json";
import resultAfterDoc from "./fixtures/enumerate_result_after_clear.json";

const result = resultDoc as unknown as ResultDocument;
const resultAfter = resultAfterDoc as unknown as ResultDocument;
const run = result.runs[0];
const runAfter = resultAfter.runs[0];

describe("heatmapCells", () => {
  const cells = heatmapCells(run, result.alternatives);

  it("shows School C at rank 3 as 0.80", () => {
    const cell = cells[2][2];
    expect(cell.alternative).toBe("School C");
    expect(cell.rank).toBe(3);
    expect(cell.label).toBe("0.80");
    expect(cell.count).toBe(752841);
    expect(cell.tooltip).toContain("752841");
  });

  it("uses the probability as cell intensity", () => {
    expect(cells[2][2].intensity).toBeCloseTo(0.796839, 6);
    expect(cells[2][0].intensity).toBeCloseTo(0.000457, 6);
  });
});

describe("preferenceCells", () => {
  const cells = preferenceCells(run, result.alternatives);

  it("mirrors the published preference table with counts", () => {
    expect(cells[0][1].label).toBe("0.51 (483246)");
    expect(cells[2][0].label).toBe("0.09 (89721)");
    expect(cells[0][0].diagonal).toBe(true);
  });
});

describe("runBadge", () => {
  it("tags enumerated runs with the full space", () => {
    const badge = runBadge(run);
    expect(badge.mode).toBe("enumerated");
    expect(badge.detail).toContain("944784");
  });

  it("tags sampled runs with accuracy, confidence, iterations, and seed", () => {
    const sampled: RunEntry = {
      ...run,
      mode: "sampled",
      plan: {
        accuracy: "1/100",
        confidence: "99",
        iterations: 16641,
        seed: 42,
      },
    };
    const badge = runBadge(sampled);
    expect(badge.mode).toBe("sampled");
    expect(badge.detail).toContain("1/100");
    expect(badge.detail).toContain("99");
    expect(badge.detail).toContain("16641");
    expect(badge.detail).toContain("42");
  });
});

describe("deltaView", () => {
  it("flags the cells an edit moved", () => {
    const delta = deltaView(run, runAfter);
    expect(delta.changedCells).toBeGreaterThan(0);
    // C at rank 3 moved from 0.796839 to 0.792224
    const cell = delta.rank[2][2];
    expect(cell.changed).toBe(true);
    expect(cell.delta).toBeCloseTo(-0.004615, 6);
    expect(cell.label).toContain("0.79");
    expect(cell.label).toContain("-0.005");
  });

  it("reports identical runs as unchanged", () => {
    const delta = deltaView(run, run);
    expect(delta.changedCells).toBe(0);
    expect(delta.rank[2][2].label).toBe("0.80");
  });
});
