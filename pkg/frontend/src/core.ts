/** DOM-free application core: session lifecycle, judgement edits, analysis
 * jobs, and result snapshots. The view layer renders whatever this holds. */

import {
  Api,
  type JobRequest,
  type MatrixStatus,
  type ProblemDocument,
  type RunEntry,
  type SessionView,
  type ValidationState,
} from "./api.js";

export interface Snapshot {
  label: string;
  jobId: string;
  run: RunEntry;
  alternatives: string[];
  editsBefore: number; // history length when the run started, for labelling
}

export interface JobProgress {
  jobId: string;
  status: string;
  progress: number;
}

const sleep = (ms: number) => new Promise<void>((resolve) => setTimeout(resolve, ms));

export class AppCore {
  session: SessionView | null = null;
  validation: ValidationState | null = null;
  snapshots: Snapshot[] = [];
  activeJob: JobProgress | null = null;
  private edits = 0;

  constructor(
    private api: Api,
    private pollIntervalMs = 300,
  ) {}

  get sessionId(): string {
    if (!this.session) {
      throw new Error("no session loaded");
    }
    return this.session.id;
  }

  get problem(): ProblemDocument {
    if (!this.session) {
      throw new Error("no session loaded");
    }
    return this.session.problem;
  }

  matrixKeys(): string[] {
    return [...this.problem.criteria, "weights"];
  }

  matrixRows(key: string) {
    return key === "weights" ? this.problem.weights : this.problem.matrices[key];
  }

  matrixLabels(key: string): string[] {
    return key === "weights" ? this.problem.criteria : this.problem.alternatives;
  }

  statusFor(key: string): MatrixStatus {
    const found = this.validation?.matrices.find((m) => m.key === key);
    if (!found) {
      throw new Error(`no validation state for matrix ${key}`);
    }
    return found;
  }

  async createSession(problem: ProblemDocument): Promise<void> {
    const created = await this.api.createSession(problem);
    // the service stores the document we sent; no need to fetch it back
    this.session = {
      id: created.id,
      created: "",
      problem,
      validation: created.validation,
      jobs: {},
      results: [],
      history_length: 0,
    };
    this.validation = created.validation;
    this.snapshots = [];
    this.edits = 0;
  }

  async loadSession(id: string): Promise<void> {
    this.session = await this.api.getSession(id);
    this.validation = this.session.validation;
    this.snapshots = [];
    this.edits = this.session.history_length;
  }

  /** Set one judgement; the service mirrors the reciprocal and returns the
   * stored pair, which is copied into the local document verbatim. */
  async setJudgement(key: string, row: number, col: number, value: number | string): Promise<ValidationState> {
    const state = await this.api.setEntry(this.sessionId, key, row, col, value);
    this.applyEdit(key, state);
    return state;
  }

  /** Clear a judgement pair; the service echoes the nulled pair back. */
  async clearJudgement(key: string, row: number, col: number): Promise<ValidationState> {
    const state = await this.api.clearEntry(this.sessionId, key, row, col);
    this.applyEdit(key, state);
    return state;
  }

  private applyEdit(key: string, state: ValidationState): void {
    const entry = state.entry;
    if (entry) {
      const rows = this.matrixRows(key);
      rows[entry.row][entry.col] = entry.value;
      rows[entry.col][entry.row] = entry.reciprocal;
    }
    this.validation = state;
    this.edits += 1;
  }

  get draft(): boolean {
    return this.validation?.draft ?? true;
  }

  get totalSpace(): string {
    return this.validation?.total_space ?? "0";
  }

  /** Start an analysis job, poll it to completion, snapshot the result. */
  async runAnalysis(request: JobRequest): Promise<Snapshot> {
    const editsBefore = this.edits;
    const { job } = await this.api.startJob(this.sessionId, request);
    this.activeJob = { jobId: job, status: "running", progress: 0 };
    try {
      for (;;) {
        const status = await this.api.jobStatus(this.sessionId, job);
        this.activeJob = {
          jobId: job,
          status: status.status,
          progress: status.progress ?? 0,
        };
        if (status.status === "done") {
          break;
        }
        if (status.status === "failed") {
          throw new Error(status.error ?? "analysis failed");
        }
        await sleep(this.pollIntervalMs);
      }
      const document = await this.api.jobResult(this.sessionId, job);
      const snapshot: Snapshot = {
        label: `run ${this.snapshots.length + 1}`,
        jobId: job,
        run: document.runs[0],
        alternatives: document.alternatives,
        editsBefore,
      };
      this.snapshots.push(snapshot);
      return snapshot;
    } finally {
      this.activeJob = null;
    }
  }

  latestSnapshot(): Snapshot | null {
    return this.snapshots[this.snapshots.length - 1] ?? null;
  }

  previousSnapshot(): Snapshot | null {
    return this.snapshots[this.snapshots.length - 2] ?? null;
  }
}

/** A fresh, fully blank problem of the given shape (every judgement open). */
export function blankProblem(alternatives: string[], criteria: string[]): ProblemDocument {
  const square = (labels: string[]) =>
    labels.map((_, i) => labels.map((_, j) => (i === j ? 1 : null)));
  const matrices: Record<string, (number | null)[][]> = {};
  for (const name of criteria) {
    matrices[name] = square(alternatives);
  }
  return {
    alternatives,
    criteria,
    matrices,
    weights: square(criteria),
  };
}
