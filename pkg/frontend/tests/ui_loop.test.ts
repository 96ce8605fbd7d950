/** End-to-end UI loop against recorded service exchanges.
 *
 * The fixture file holds every request/response the real HTTP service
 * produced for this exact scenario: create a blank problem, enter the
 * school judgements cell by cell through the grid, enumerate, clear one
 * weight judgement, enumerate again. The fake fetch replays it strictly in
 * order, so the numbers asserted here are the service's own.
 */

import { describe, expect, it } from "vitest";

import { Api, type Entry, type ResultDocument } from "../src/api.js";
import { AppCore, blankProblem } from "../src/core.js";
import { schoolExample } from "../src/example.js";
import { gridCells } from "../src/gridmodel.js";
import { deltaView, heatmapCells, runBadge } from "../src/results.js";
import exchangesDoc from "./fixtures/ui_loop_exchanges.json";
import expectedResult from "./fixtures/enumerate_result.json";
import expectedResultAfter from "./fixtures/enumerate_result_after_clear.json";

interface Exchange {
  method: string;
  path: string;
  body: unknown;
  status: number;
  response: unknown;
}

function replayFetch(exchanges: Exchange[]) {
  let cursor = 0;
  const consumed = () => cursor;
  const fetchFn = async (input: string, init?: RequestInit): Promise<Response> => {
    const expected = exchanges[cursor];
    if (!expected) {
      throw new Error(`unexpected extra request ${init?.method} ${input}`);
    }
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(init.body as string) : null;
    expect(`${method} ${input}`).toBe(`${expected.method} ${expected.path}`);
    expect(body).toEqual(expected.body);
    cursor += 1;
    return new Response(JSON.stringify(expected.response), {
      status: expected.status,
      headers: { "content-type": "application/json" },
    });
  };
  return { fetchFn, consumed };
}

describe("full decision loop", () => {
  it("enters the school matrices, enumerates, edits, and sees the delta", async () => {
    const exchanges = (exchangesDoc as { exchanges: Exchange[] }).exchanges;
    const { fetchFn, consumed } = replayFetch(exchanges);
    const core = new AppCore(new Api("", fetchFn), 0);
    const school = schoolExample();

    // start from a blank draft problem of the school's shape
    await core.createSession(blankProblem(school.alternatives, school.criteria));
    expect(core.draft).toBe(true);

    // type every judgement into the editable upper triangle, grid order
    for (const key of core.matrixKeys()) {
      const target = key === "weights" ? school.weights : school.matrices[key];
      for (const line of gridCells(core.matrixRows(key) as Entry[][], core.matrixLabels(key))) {
        for (const cell of line) {
          if (cell.kind === "editable") {
            await core.setJudgement(key, cell.row, cell.col, target[cell.row][cell.col]!);
          }
        }
      }
    }
    expect(core.draft).toBe(false);
    expect(core.totalSpace).toBe("944784");

    // the lower triangle now mirrors the service's exact reciprocals
    const learning = core.matrixRows("learning") as Entry[][];
    expect(learning[0][1]).toBe("1/3");
    expect(learning[1][0]).toBe(3);

    // run the exact enumeration and read the heatmap
    const first = await core.runAnalysis({ mode: "enumerate" });
    expect(runBadge(first.run).mode).toBe("enumerated");
    const heat = heatmapCells(first.run, first.alternatives);
    expect(heat[2][2].alternative).toBe("School C");
    expect(heat[2][2].label).toBe("0.80");
    expect(heat[2][2].count).toBe(752841);

    // every number shown equals the service's result document
    expect(first.run).toEqual((expectedResult as unknown as ResultDocument).runs[0]);

    // clear one weight judgement; the space shrinks, still analyzable
    await core.clearJudgement("weights", 1, 2);
    expect(core.totalSpace).toBe("629856");
    const weights = core.matrixRows("weights") as Entry[][];
    expect(weights[1][2]).toBeNull();
    expect(weights[2][1]).toBeNull();

    // re-run and compare snapshots: the delta view highlights what moved
    const second = await core.runAnalysis({ mode: "enumerate" });
    expect(second.run).toEqual((expectedResultAfter as unknown as ResultDocument).runs[0]);
    const delta = deltaView(core.previousSnapshot()!.run, core.latestSnapshot()!.run);
    expect(delta.changedCells).toBeGreaterThan(0);
    expect(delta.rank[2][2].changed).toBe(true);
    expect(delta.rank[2][2].label).toBe("0.79 (-0.005)");

    // the whole recorded conversation was consumed, nothing skipped
    expect(consumed()).toBe(exchanges.length);
  });
});
