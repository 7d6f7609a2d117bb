/**
 * Typed client for the seed-session JSON API.
 *
 * The backend is the single source of truth for all algebra: the client
 * only transports seeds, it never computes them.
 */

export interface QuiverData {
  n: number;
  m: number;
  d: number[];
  entries: number[][];
  labels: string[];
  frozen: boolean[];
}

export interface SeedPayload {
  preset: string;
  quiver: QuiverData;
  cluster: string[];
  layout: Record<string, [number, number]>;
  steps: number;
}

export interface PresetRow {
  spec: string;
  name: string;
  description: string;
}

export interface SessionHandle {
  id: string;
  seed: SeedPayload;
}

export interface SessionHistory {
  preset: string;
  walk: number[];
}

/** The slice of the API a mutation session needs; tests substitute fakes. */
export interface SeedApi {
  createSession(preset: string): Promise<SessionHandle>;
  mutate(id: string, vertex: number): Promise<SeedPayload>;
  undo(id: string): Promise<SeedPayload>;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

export class ApiClient implements SeedApi {
  constructor(private readonly baseUrl: string = "") {}

  async presets(): Promise<PresetRow[]> {
    const data = await this.request<{ presets: PresetRow[] }>("GET", "/api/presets");
    return data.presets;
  }

  createSession(preset: string): Promise<SessionHandle> {
    return this.request("POST", "/api/session", { preset });
  }

  seed(id: string): Promise<SeedPayload> {
    return this.request("GET", `/api/session/${id}/seed`);
  }

  mutate(id: string, vertex: number): Promise<SeedPayload> {
    return this.request("POST", `/api/session/${id}/mutate`, { vertex });
  }

  undo(id: string): Promise<SeedPayload> {
    return this.request("POST", `/api/session/${id}/undo`);
  }

  history(id: string): Promise<SessionHistory> {
    return this.request("GET", `/api/session/${id}/history`);
  }

  private async request<T>(method: string, path: string, body?: object): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body ? { "Content-Type": "application/json" } : undefined,
      body: body ? JSON.stringify(body) : undefined,
    });
    const data: unknown = await response.json();
    if (!response.ok) {
      const message = (data as { error?: string }).error ?? response.statusText;
      throw new ApiError(response.status, message);
    }
    return data as T;
  }
}
