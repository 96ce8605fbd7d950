/** Typed client for the spanrank HTTP service. Every number the UI shows
 * comes through here; nothing is recomputed client-side. */

export type Entry = number | string | null;

export interface ProblemDocument {
  alternatives: string[];
  criteria: string[];
  matrices: Record<string, Entry[][]>;
  weights: Entry[][];
}

export interface Violation {
  code: string;
  location: string;
  detail: string;
}

export interface MatrixStatus {
  key: string;
  size: number;
  judged_pairs: number;
  complete: boolean;
  connected: boolean;
  consistency_ratio: number | null;
  transitivity_violations: number[][];
  tree_count: number;
}

export interface ValidationState {
  draft: boolean;
  violations: Violation[];
  matrices: MatrixStatus[];
  total_space: string;
  entry?: {
    matrix: string;
    row: number;
    col: number;
    value: Entry;
    reciprocal: Entry;
  };
}

export interface JobRecord {
  status: "queued" | "running" | "done" | "failed";
  mode: string;
  submitted?: string;
  progress?: number;
  error?: string;
  result_url?: string;
}

export interface SessionView {
  id: string;
  created: string;
  problem: ProblemDocument;
  validation: ValidationState;
  jobs: Record<string, JobRecord>;
  results: string[];
  history_length: number;
}

export interface PlanRecord {
  accuracy: string;
  confidence: string;
  z?: string;
  iterations: number;
  iterations_overridden?: boolean;
  seed: number;
}

export interface RunEntry {
  mode: "enumerated" | "sampled";
  combinations_evaluated: number;
  total_space: string;
  preference_counts: number[][];
  indifference_counts: number[][];
  rank_counts: number[][];
  preference_probabilities: number[][] | null;
  indifference_probabilities: number[][] | null;
  rank_probabilities: number[][] | null;
  plan: PlanRecord | null;
  seed: number | null;
}

export interface ResultDocument {
  toolkit_version: string;
  problem_digest: string;
  alternatives: string[];
  runs: RunEntry[];
}

export interface JobRequest {
  mode: "auto" | "enumerate" | "sample";
  accuracy?: number | string;
  confidence?: number | string;
  z?: number | string;
  iterations?: number;
  seed?: number;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: unknown,
    public violations: Violation[] = [],
  ) {
    super(typeof detail === "string" ? detail : `request failed with ${status}`);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class Api {
  constructor(
    private base: string = "",
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.base + path, init);
    const payload = await response.json().catch(() => null);
    if (!response.ok) {
      const detail = payload && typeof payload === "object" ? (payload as any).detail : payload;
      const violations =
        detail && typeof detail === "object" && Array.isArray((detail as any).violations)
          ? (detail as any).violations
          : [];
      throw new ApiError(response.status, detail, violations);
    }
    return payload as T;
  }

  createSession(problem: ProblemDocument): Promise<{ id: string; validation: ValidationState }> {
    return this.request("POST", "/sessions", problem);
  }

  getSession(id: string): Promise<SessionView> {
    return this.request("GET", `/sessions/${id}`);
  }

  setEntry(
    session: string,
    matrix: string,
    row: number,
    col: number,
    value: number | string,
  ): Promise<ValidationState> {
    return this.request(
      "PUT",
      `/sessions/${session}/matrices/${matrix}/entries/${row}/${col}`,
      { value },
    );
  }

  clearEntry(session: string, matrix: string, row: number, col: number): Promise<ValidationState> {
    return this.request("DELETE", `/sessions/${session}/matrices/${matrix}/entries/${row}/${col}`);
  }

  startJob(session: string, job: JobRequest): Promise<{ job: string }> {
    return this.request("POST", `/sessions/${session}/jobs`, job);
  }

  jobStatus(session: string, job: string): Promise<JobRecord> {
    return this.request("GET", `/sessions/${session}/jobs/${job}`);
  }

  jobResult(session: string, job: string): Promise<ResultDocument> {
    return this.request("GET", `/sessions/${session}/results/${job}`);
  }
}
