import { expect, test } from "vitest";

import { ApiClient } from "../src/api.js";
import { Session } from "../src/state.js";
import { fixture, fixtureFetch } from "./helpers.js";

function session(delayMs?: number): Session {
  return new Session(new ApiClient("", fixtureFetch({ delayMs })));
}

test("mutating twice at one vertex restores the previous seed id", async () => {
  const s = session();
  const start = await s.load("A2");
  expect(start.id).toBe(fixture.meta.a2_initial);
  const once = await s.clickVertex(1);
  expect(once.id).not.toBe(start.id);
  const undone = await s.undo();
  expect(undone.id).toBe(start.id);
  expect(s.history).toHaveLength(2);
});

test("history replay reproduces the current seed id", async () => {
  const s = session();
  await s.load("A2");
  await s.clickVertex(1);
  await s.clickVertex(2);
  expect(await s.replay()).toBe(s.current?.id);
});

test("rapid clicks queue behind the in-flight mutation in order", async () => {
  const s = session(5);
  const start = await s.load("A2");
  const first = s.clickVertex(1);
  const second = s.clickVertex(1); // fired before the first resolves
  const [a, b] = await Promise.all([first, second]);
  expect(a.id).not.toBe(start.id);
  expect(b.id).toBe(start.id); // second click saw the first's result
  expect(s.history.map((h) => h.id)).toEqual([a.id, start.id]);
});

test("mutation errors leave the session usable", async () => {
  const s = session();
  await s.load("A2");
  await expect(s.clickVertex(9)).rejects.toThrow(/no recorded response/);
  const next = await s.clickVertex(1);
  expect(next.id).not.toBe("");
});
