// Typed client for the selection service. Every parsed response body is
// appended to `traffic`, so tests (and debugging) can trace any displayed
// value back to the exact service response it came from.

import type {
  AlternativeDoc,
  AlternativeResponse,
  CriteriaPairId,
  EnumerateResponse,
  ErrorBody,
  EvaluationResponse,
  ParetoResponse,
  ProjectsResponse,
  RubricId,
  ThresholdsDoc,
  ThresholdsResponse,
  WorkspaceResponse,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly detail: unknown = null,
  ) {
    super(message);
    this.name = "ServiceError";
  }
}

export interface TrafficEntry {
  method: string;
  path: string;
  status: number;
  body: unknown;
}

export class ApiClient {
  readonly traffic: TrafficEntry[] = [];

  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  lastResponse(method: string, pathPrefix: string): unknown {
    for (let i = this.traffic.length - 1; i >= 0; i--) {
      const entry = this.traffic[i]!;
      if (entry.method === method && entry.path.startsWith(pathPrefix)) return entry.body;
    }
    return undefined;
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    signal?: AbortSignal,
  ): Promise<T> {
    let res: Response;
    try {
      res = await this.fetchFn(this.baseUrl + path, {
        method,
        signal,
        headers: body === undefined ? undefined : { "content-type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      if (err instanceof Error && err.name === "AbortError") throw err;
      const reason = err instanceof Error ? err.message : String(err);
      throw new ServiceError(0, "unreachable", `service unreachable: ${reason}`);
    }
    const parsed: unknown = await res.json().catch(() => null);
    this.traffic.push({ method, path, status: res.status, body: parsed });
    if (!res.ok) {
      const e = (parsed ?? {}) as Partial<ErrorBody>;
      throw new ServiceError(res.status, e.code ?? "error", e.message ?? res.statusText, e.detail);
    }
    return parsed as T;
  }

  getWorkspace(): Promise<WorkspaceResponse> {
    return this.request("GET", "/workspace");
  }

  getProjects(params?: { rubric?: RubricId; preferredPair?: CriteriaPairId }): Promise<ProjectsResponse> {
    const query = new URLSearchParams();
    if (params?.rubric) query.set("rubric", params.rubric);
    if (params?.preferredPair) query.set("preferred_pair", params.preferredPair);
    const qs = query.toString();
    return this.request("GET", qs ? `/projects?${qs}` : "/projects");
  }

  putThresholds(thresholds: ThresholdsDoc, revision: number): Promise<ThresholdsResponse> {
    return this.request("PUT", "/thresholds", { thresholds, revision });
  }

  postAlternative(alternative: AlternativeDoc, revision: number): Promise<AlternativeResponse> {
    return this.request("POST", "/alternatives", { alternative, revision });
  }

  putAlternative(alternative: AlternativeDoc, revision: number): Promise<AlternativeResponse> {
    return this.request("PUT", `/alternatives/${encodeURIComponent(alternative.id)}`, {
      alternative,
      revision,
    });
  }

  getEvaluation(alternativeId: string): Promise<EvaluationResponse> {
    return this.request("GET", `/alternatives/${encodeURIComponent(alternativeId)}/evaluation`);
  }

  whatif(alternative: AlternativeDoc, signal?: AbortSignal): Promise<EvaluationResponse> {
    return this.request("POST", "/whatif", { alternative }, signal);
  }

  getPareto(): Promise<ParetoResponse> {
    return this.request("GET", "/pareto");
  }

  enumerate(candidates: string[], cap?: number): Promise<EnumerateResponse> {
    return this.request("POST", "/enumerate", cap === undefined ? { candidates } : { candidates, cap });
  }
}
