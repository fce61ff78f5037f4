/** Arrow-set geometry helpers: directed cycles and a deterministic layout. */

export interface Pt {
  x: number;
  y: number;
}

export function arrowKey(u: number, v: number): string {
  return `${u}>${v}`;
}

export function arrowSet(arrows: [number, number][]): Set<string> {
  return new Set(arrows.map(([u, v]) => arrowKey(u, v)));
}

/** True when consecutive vertices (cyclically) are all joined head to tail. */
export function isDirectedCycle(cycle: number[], arrows: [number, number][]): boolean {
  if (cycle.length < 2) return false;
  const has = arrowSet(arrows);
  return cycle.every((u, i) => has.has(arrowKey(u, cycle[(i + 1) % cycle.length]!)));
}

/** All 3-cycles that run one way around, as vertex triples in cycle order. */
export function directedTriangles(arrows: [number, number][]): [number, number, number][] {
  const has = arrowSet(arrows);
  const verts = [...new Set(arrows.flat())].sort((a, b) => a - b);
  const out: [number, number, number][] = [];
  for (let i = 0; i < verts.length; i++) {
    for (let j = i + 1; j < verts.length; j++) {
      for (let k = j + 1; k < verts.length; k++) {
        const [a, b, c] = [verts[i]!, verts[j]!, verts[k]!];
        if (has.has(arrowKey(a, b)) && has.has(arrowKey(b, c)) && has.has(arrowKey(c, a))) {
          out.push([a, b, c]);
        } else if (has.has(arrowKey(a, c)) && has.has(arrowKey(c, b)) && has.has(arrowKey(b, a))) {
          out.push([a, c, b]);
        }
      }
    }
  }
  return out;
}

/** Spring layout from a fixed circular start, so the result is deterministic.
 * Pinned vertices keep their given positions; mutation then animates in place. */
export function layout(
  n: number,
  arrows: [number, number][],
  width: number,
  height: number,
  pinned?: Map<number, Pt>,
  iterations = 150,
): Map<number, Pt> {
  const pos = new Map<number, Pt>();
  const cx = width / 2;
  const cy = height / 2;
  const r = Math.min(width, height) * 0.38;
  for (let v = 1; v <= n; v++) {
    const fixed = pinned?.get(v);
    const angle = (2 * Math.PI * (v - 1)) / n - Math.PI / 2;
    pos.set(v, fixed ? { ...fixed } : { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  const spring = r * 0.9;
  for (let it = 0; it < iterations; it++) {
    const force = new Map<number, Pt>();
    for (let v = 1; v <= n; v++) force.set(v, { x: 0, y: 0 });
    for (let u = 1; u <= n; u++) {
      for (let v = u + 1; v <= n; v++) {
        const pu = pos.get(u)!;
        const pv = pos.get(v)!;
        const dx = pv.x - pu.x;
        const dy = pv.y - pu.y;
        const d = Math.max(Math.hypot(dx, dy), 1e-3);
        const rep = (spring * spring) / d / d;
        force.get(u)!.x -= (dx / d) * rep * 8;
        force.get(u)!.y -= (dy / d) * rep * 8;
        force.get(v)!.x += (dx / d) * rep * 8;
        force.get(v)!.y += (dy / d) * rep * 8;
      }
    }
    for (const [u, v] of arrows) {
      const pu = pos.get(u)!;
      const pv = pos.get(v)!;
      const dx = pv.x - pu.x;
      const dy = pv.y - pu.y;
      const d = Math.max(Math.hypot(dx, dy), 1e-3);
      const pull = (d - spring) * 0.02;
      force.get(u)!.x += (dx / d) * pull;
      force.get(u)!.y += (dy / d) * pull;
      force.get(v)!.x -= (dx / d) * pull;
      force.get(v)!.y -= (dy / d) * pull;
    }
    for (let v = 1; v <= n; v++) {
      if (pinned?.has(v)) continue;
      const p = pos.get(v)!;
      const f = force.get(v)!;
      p.x = Math.min(width - 24, Math.max(24, p.x + f.x));
      p.y = Math.min(height - 24, Math.max(24, p.y + f.y));
    }
  }
  return pos;
}
