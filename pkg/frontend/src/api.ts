/** Thin typed client for the scenario service. */

import type { ScenarioDoc, SimRequest, SimResponse } from "./types.js";

export class ApiError extends Error {
  constructor(message: string, readonly status?: number) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class WorkbenchApi {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    } catch (err) {
      throw new ApiError(`service unreachable: ${String(err)}`);
    }
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      const detail =
        body && typeof body === "object" && "error" in body
          ? String((body as { error: unknown }).error)
          : response.statusText;
      throw new ApiError(detail, response.status);
    }
    return body as T;
  }

  async health(): Promise<{ status: string; version: string }> {
    return this.request("/api/healthz");
  }

  async presets(): Promise<ScenarioDoc[]> {
    const payload = await this.request<{ presets: ScenarioDoc[] }>("/api/presets");
    if (!Array.isArray(payload.presets) || payload.presets.length === 0) {
      throw new ApiError("preset list missing or empty");
    }
    return payload.presets;
  }

  async simulate(request: SimRequest): Promise<SimResponse> {
    return this.request("/api/simulate", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
  }
}
