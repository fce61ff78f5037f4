/** Replays recorded backend responses; requests with no recording throw. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { FetchLike } from "../src/api.js";

interface Fixture {
  exchanges: Record<string, { status: number; json: unknown }>;
  meta: {
    a2_initial: string;
    d5_initial: string;
    d5_fan_seed: string;
    d5_fan_walk: number[];
  };
}

const here = dirname(fileURLToPath(import.meta.url));
export const fixture: Fixture = JSON.parse(
  readFileSync(join(here, "fixtures", "server.json"), "utf8"),
) as Fixture;

/** Key-sorted compact JSON, matching how the fixture keys were written. */
function canonical(x: unknown): string {
  if (Array.isArray(x)) return "[" + x.map(canonical).join(",") + "]";
  if (x !== null && typeof x === "object") {
    const rec = x as Record<string, unknown>;
    const keys = Object.keys(rec).sort();
    return "{" + keys.map((k) => JSON.stringify(k) + ":" + canonical(rec[k])).join(",") + "}";
  }
  return JSON.stringify(x);
}

export function fixtureFetch(options?: { delayMs?: number; log?: string[] }): FetchLike {
  return async (url, init) => {
    const method = init?.method ?? "GET";
    const body = init?.body !== undefined ? canonical(JSON.parse(init.body)) : "";
    const key = `${method} ${url} ${body}`.trimEnd();
    options?.log?.push(key);
    if (options?.delayMs) {
      await new Promise((resolve) => setTimeout(resolve, options.delayMs));
    }
    const hit = fixture.exchanges[key];
    if (!hit) throw new Error(`no recorded response for: ${key}`);
    return { status: hit.status, json: async () => hit.json };
  };
}
