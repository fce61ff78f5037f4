import { expect, test } from "vitest";

import { ApiClient } from "../src/api.js";
import { variableRows } from "../src/panel.js";
import { Session } from "../src/state.js";
import { fixtureFetch } from "./helpers.js";

test("the A2 walk 1,2,1,2,1 returns to the starting cluster", async () => {
  const s = new Session(new ApiClient("", fixtureFetch()));
  const start = await s.load("A2");
  const clusters = [start.cluster];
  for (const v of [1, 2, 1, 2, 1]) {
    clusters.push((await s.clickVertex(v)).cluster);
  }
  expect(clusters[5]).toBe(clusters[0]);
  expect(new Set(clusters).size).toBe(5);
  // the cluster is back but the slots are transposed, so the seed id is not
  expect(s.current?.id).not.toBe(start.id);
});

test("the panel shows the rendered fraction after one mutation", async () => {
  const s = new Session(new ApiClient("", fixtureFetch()));
  await s.load("A2");
  const initialRows = variableRows(s.current!, true);
  expect(initialRows.map((r) => r.formula)).toEqual(["x1", "x2"]);
  expect(initialRows.map((r) => r.root)).toEqual(["-a1", "-a2"]);
  await s.clickVertex(1);
  const rows = variableRows(s.current!, true);
  expect(rows[0]?.formula).toBe("(x2 + 1)/x1");
  expect(rows[0]?.badge).toBe("d=(1,0)");
  expect(rows[0]?.root).toBe("(1,0)");
  const noBadges = variableRows(s.current!, false);
  expect(noBadges.every((r) => r.badge === "")).toBe(true);
});
