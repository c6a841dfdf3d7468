// Thin typed client over the session HTTP API; fetch is injectable so the
// test suite can substitute a stub service.

import type {
  ParseErrorJson, PendingEntryJson, SessionStatus, SignatureJson,
  TestResultJson,
} from "./model.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface CreateSessionResponse extends SessionStatus {
  id: string;
}

export interface AddPendingResponse {
  position: number;
  parseError?: ParseErrorJson;
}

export interface EvaluateItem {
  position: number;
  result: TestResultJson | null;
  parseError?: ParseErrorJson;
}

export class ApiError extends Error {
  constructor(public status: number, public detail: unknown) {
    super(`service error ${status}`);
  }
}

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) {
      let detail: unknown = null;
      try {
        detail = (await response.json()).detail;
      } catch {
        detail = await response.text();
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  createSession(ontologyText: string): Promise<CreateSessionResponse> {
    return this.request("/sessions", {
      method: "POST",
      headers: { "Content-Type": "text/plain" },
      body: ontologyText,
    });
  }

  signature(sessionId: string): Promise<SignatureJson> {
    return this.request(`/sessions/${sessionId}/signature`);
  }

  addPending(sessionId: string, text: string): Promise<AddPendingResponse> {
    return this.request(`/sessions/${sessionId}/pending`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text }),
    });
  }

  evaluate(sessionId: string, positions?: number[]): Promise<EvaluateItem[]> {
    return this.request(`/sessions/${sessionId}/evaluate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(positions === undefined ? {} : { positions }),
    });
  }

  commit(sessionId: string, positions: number[]): Promise<SessionStatus> {
    return this.request(`/sessions/${sessionId}/commit`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ positions }),
    });
  }

  pending(sessionId: string): Promise<PendingEntryJson[]> {
    return this.request(`/sessions/${sessionId}/pending`);
  }

  async exportOntology(sessionId: string): Promise<string> {
    const response = await this.fetchImpl(`${this.baseUrl}/sessions/${sessionId}/export`);
    if (!response.ok) {
      throw new ApiError(response.status, await response.text());
    }
    return response.text();
  }
}
