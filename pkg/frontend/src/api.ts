/** Thin typed client over the backend JSON API.  The fetch implementation
 * is injectable so tests can replay recorded responses. */

import type { SeedState, TypesInfo } from "./types.js";

export interface FetchInit {
  method?: string;
  headers?: Record<string, string>;
  body?: string;
}

export interface FetchResponse {
  status: number;
  json(): Promise<unknown>;
}

export type FetchLike = (url: string, init?: FetchInit) => Promise<FetchResponse>;

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

const browserFetch: FetchLike = (url, init) => fetch(url, init);

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = browserFetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: FetchInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const r = await this.fetchImpl(this.base + path, init);
    const data = (await r.json()) as Record<string, unknown>;
    if (r.status >= 400) {
      throw new ApiError(r.status, String(data["detail"] ?? `request failed (${r.status})`));
    }
    return data as T;
  }

  types(): Promise<TypesInfo> {
    return this.request("GET", "/types");
  }

  seed(type: string): Promise<SeedState> {
    return this.request("POST", "/seed", { type });
  }

  mutate(seed: string, vertex: number): Promise<SeedState> {
    return this.request("POST", "/mutate", { seed, vertex });
  }

  atlas(type: string): Promise<unknown> {
    return this.request("GET", `/atlas/${type}`);
  }
}
