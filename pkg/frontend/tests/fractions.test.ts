import { describe, expect, it } from "vitest";

import { checkJudgementInput, entryText } from "../src/fractions.js";

describe("checkJudgementInput", () => {
  it("accepts integers, decimals, and fractions", () => {
    for (const text of ["3", " 9 ", "0.5", "2.25", "1/3", " 7 / 2 "]) {
      expect(checkJudgementInput(text).ok, text).toBe(true);
    }
  });

  it("rejects non-positive values", () => {
    for (const text of ["0", "-3", "-0.5", "0/4"]) {
      const check = checkJudgementInput(text);
      expect(check.ok, text).toBe(false);
      expect(check.message).toMatch(/positive/);
    }
  });

  it("rejects malformed input", () => {
    for (const text of ["", "abc", "1/0", "3//4", "1.2.3"]) {
      expect(checkJudgementInput(text).ok, text).toBe(false);
    }
  });
});

describe("entryText", () => {
  it("renders entries exactly as stored", () => {
    expect(entryText(3)).toBe("3");
    expect(entryText("1/3")).toBe("1/3");
    expect(entryText(null)).toBe("");
  });
});
