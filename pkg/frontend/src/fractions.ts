/** Light validation of judgement input before it is sent to the service.
 * The service owns parsing and storage; this only catches obvious mistakes
 * (empty, non-numeric, non-positive) for immediate inline feedback. */

const FRACTION = /^\s*(\d+)\s*\/\s*(\d+)\s*$/;
const DECIMAL = /^\s*\d+(\.\d+)?\s*$/;

export interface InputCheck {
  ok: boolean;
  message?: string;
}

export function checkJudgementInput(text: string): InputCheck {
  const trimmed = text.trim();
  if (trimmed === "") {
    return { ok: false, message: "enter a ratio, e.g. 3 or 1/3" };
  }
  const fraction = FRACTION.exec(trimmed);
  if (fraction) {
    if (Number(fraction[1]) === 0) {
      return { ok: false, message: "ratio must be positive" };
    }
    if (Number(fraction[2]) === 0) {
      return { ok: false, message: "denominator cannot be zero" };
    }
    return { ok: true };
  }
  if (DECIMAL.test(trimmed)) {
    if (Number(trimmed) <= 0) {
      return { ok: false, message: "ratio must be positive" };
    }
    return { ok: true };
  }
  if (trimmed.startsWith("-")) {
    return { ok: false, message: "ratio must be positive" };
  }
  return { ok: false, message: "not a ratio; use 3, 0.5 or 1/3" };
}

/** Display text for an entry exactly as the service stored it. */
export function entryText(entry: number | string | null): string {
  if (entry === null) {
    return "";
  }
  return String(entry);
}
