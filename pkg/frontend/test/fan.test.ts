import { expect, test } from "vitest";

import { ApiClient } from "../src/api.js";
import { directedTriangles, isDirectedCycle, layout } from "../src/graph.js";
import { classifyArrows } from "../src/render.js";
import { Session } from "../src/state.js";
import type { SeedState } from "../src/types.js";
import { fixture, fixtureFetch } from "./helpers.js";

async function fanState(): Promise<SeedState> {
  const s = new Session(new ApiClient("", fixtureFetch()));
  await s.load("D5");
  for (const v of fixture.meta.d5_fan_walk) {
    await s.clickVertex(v);
  }
  expect(s.current?.id).toBe(fixture.meta.d5_fan_seed);
  return s.current!;
}

test("the D5 fan cluster carries three oriented triangles", async () => {
  const state = await fanState();
  const arrows = state.qt.arrows!;
  const triangles = directedTriangles(arrows);
  expect(triangles).toHaveLength(3);
  for (const t of triangles) {
    expect(isDirectedCycle(t, arrows)).toBe(true);
  }
  // the seed quiver and the overlay agree arrow for arrow
  const seedKeys = new Set(state.arrows.map(([u, v]) => `${u}>${v}`));
  expect(new Set(arrows.map(([u, v]) => `${u}>${v}`))).toEqual(seedKeys);
});

test("relation kinds color the overlay; missing data degrades", async () => {
  const state = await fanState();
  const kinds = classifyArrows(state)!;
  expect(kinds).not.toBeNull();
  const byKind = [...kinds.values()].reduce(
    (acc, k) => ((acc[k] = (acc[k] ?? 0) + 1), acc),
    {} as Record<string, number>,
  );
  expect(byKind["commutativity"]).toBe(2);
  expect(byKind["zero"]).toBe(5);
  const broken: SeedState = { ...state, qt: { error: "unavailable" } };
  expect(classifyArrows(broken)).toBeNull();
});

test("layout is deterministic and respects pinned positions", async () => {
  const state = await fanState();
  const a = layout(state.n, state.arrows, 640, 480);
  const b = layout(state.n, state.arrows, 640, 480);
  expect([...a.entries()]).toEqual([...b.entries()]);
  const pinned = new Map([[1, { x: 50, y: 60 }]]);
  const c = layout(state.n, state.arrows, 640, 480, pinned);
  expect(c.get(1)).toEqual({ x: 50, y: 60 });
});
