/** Variable panel: view models straight from server data, then DOM. */

import type { SeedState } from "./types.js";

export interface VariableRow {
  slot: number;
  formula: string;
  badge: string;
  root: string;
}

export function rootLabel(root: number[]): string {
  const neg = root.findIndex((x) => x === -1);
  if (neg >= 0 && root.every((x, i) => (i === neg ? x === -1 : x === 0))) {
    return `-a${neg + 1}`;
  }
  return `(${root.join(",")})`;
}

export function variableRows(state: SeedState, showDenominators: boolean): VariableRow[] {
  return state.variables.map((v) => ({
    slot: v.slot,
    formula: v.text,
    badge: showDenominators ? `d=(${v.denominator.join(",")})` : "",
    root: rootLabel(v.root),
  }));
}

export function renderPanel(el: HTMLElement, rows: VariableRow[]): void {
  el.replaceChildren();
  for (const row of rows) {
    const div = document.createElement("div");
    div.className = "variable-row";
    const slot = document.createElement("span");
    slot.className = "slot";
    slot.textContent = `x[${row.slot}]`;
    const formula = document.createElement("code");
    formula.textContent = row.formula;
    const root = document.createElement("span");
    root.className = "root";
    root.textContent = row.root;
    div.append(slot, formula, root);
    if (row.badge) {
      const badge = document.createElement("span");
      badge.className = "badge";
      badge.textContent = row.badge;
      div.append(badge);
    }
    el.append(div);
  }
}
