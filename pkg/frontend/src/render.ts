/** Canvas quiver renderer with an optional endomorphism-quiver overlay. */

import { arrowKey, type Pt } from "./graph.js";
import type { RelationKind, SeedState } from "./types.js";

export const KIND_COLORS: Record<RelationKind, string> = {
  none: "#4a4a4a",
  zero: "#c0392b",
  commutativity: "#2263a8",
};

/** Relation kind per arrow, or null when the overlay data is unavailable. */
export function classifyArrows(state: SeedState): Map<string, RelationKind> | null {
  const qt = state.qt;
  if (!qt.arrows || !qt.relations) return null;
  const kinds = new Map<string, RelationKind>();
  for (const [u, v] of qt.arrows) kinds.set(arrowKey(u, v), "none");
  for (const rel of qt.relations) {
    kinds.set(arrowKey(rel.arrow[0], rel.arrow[1]), rel.kind);
  }
  return kinds;
}

export interface DrawOptions {
  showQt: boolean;
  highlight?: number;
}

export function draw(
  canvas: HTMLCanvasElement,
  state: SeedState,
  positions: Map<number, Pt>,
  opts: DrawOptions,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const kinds = opts.showQt ? classifyArrows(state) : null;

  for (const [u, v] of state.arrows) {
    const a = positions.get(u);
    const b = positions.get(v);
    if (!a || !b) continue;
    const kind = kinds?.get(arrowKey(u, v)) ?? "none";
    ctx.strokeStyle = KIND_COLORS[kind];
    ctx.fillStyle = ctx.strokeStyle;
    ctx.lineWidth = kind === "none" ? 1.5 : 2.5;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const d = Math.hypot(dx, dy);
    const ux = dx / d;
    const uy = dy / d;
    const sx = a.x + ux * 16;
    const sy = a.y + uy * 16;
    const ex = b.x - ux * 16;
    const ey = b.y - uy * 16;
    ctx.beginPath();
    ctx.moveTo(sx, sy);
    ctx.lineTo(ex, ey);
    ctx.stroke();
    ctx.beginPath();
    ctx.moveTo(ex, ey);
    ctx.lineTo(ex - ux * 9 - uy * 5, ey - uy * 9 + ux * 5);
    ctx.lineTo(ex - ux * 9 + uy * 5, ey - uy * 9 - ux * 5);
    ctx.closePath();
    ctx.fill();
  }

  for (const [v, p] of positions) {
    ctx.beginPath();
    ctx.arc(p.x, p.y, 13, 0, 2 * Math.PI);
    ctx.fillStyle = v === opts.highlight ? "#f0c040" : "#ffffff";
    ctx.fill();
    ctx.strokeStyle = "#333";
    ctx.lineWidth = 1.5;
    ctx.stroke();
    ctx.fillStyle = "#111";
    ctx.font = "12px sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(String(v), p.x, p.y);
  }

  if (opts.showQt && !kinds && state.qt.error) {
    ctx.fillStyle = "#888";
    ctx.font = "11px sans-serif";
    ctx.textAlign = "left";
    ctx.fillText(`overlay unavailable: ${state.qt.error}`, 8, canvas.height - 10);
  }
}

export function vertexAt(positions: Map<number, Pt>, x: number, y: number): number | null {
  for (const [v, p] of positions) {
    if (Math.hypot(p.x - x, p.y - y) <= 15) return v;
  }
  return null;
}
