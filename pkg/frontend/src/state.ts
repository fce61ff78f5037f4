/** Session state: the current seed, its mutation history, click queueing.
 *
 * All algebra happens on the server; this module only sequences requests
 * and records ids.  At most one mutation is in flight; further vertex
 * clicks are queued behind it in order.
 */

import type { ApiClient } from "./api.js";
import type { SeedState } from "./types.js";

export interface Step {
  vertex: number;
  id: string;
}

export class Session {
  current: SeedState | null = null;
  initialId = "";
  readonly history: Step[] = [];
  showDenominators = true;
  showQt = true;

  private busy: Promise<unknown> = Promise.resolve();

  constructor(private readonly api: ApiClient) {}

  async load(type: string): Promise<SeedState> {
    const s = await this.api.seed(type);
    this.current = s;
    this.initialId = s.id;
    this.history.length = 0;
    return s;
  }

  /** Mutate at a vertex; concurrent clicks run strictly one after another. */
  clickVertex(vertex: number): Promise<SeedState> {
    const run = this.busy.then(async () => {
      if (!this.current) throw new Error("no seed loaded");
      const next = await this.api.mutate(this.current.id, vertex);
      this.history.push({ vertex, id: next.id });
      this.current = next;
      return next;
    });
    this.busy = run.catch(() => undefined);
    return run;
  }

  /** Undo is just mutating again at the last vertex: mutation is an involution. */
  undo(): Promise<SeedState> {
    const last = this.history[this.history.length - 1];
    if (!last) return Promise.reject(new Error("nothing to undo"));
    return this.clickVertex(last.vertex);
  }

  /** Replays the history from a fresh seed; must land on the current id. */
  async replay(): Promise<string> {
    if (!this.current) throw new Error("no seed loaded");
    let s = await this.api.seed(this.current.type);
    for (const step of this.history) {
      s = await this.api.mutate(s.id, step.vertex);
    }
    return s.id;
  }
}
