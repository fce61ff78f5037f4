/** Browser entry point: wires the API, session, canvas and panel together. */

import { ApiClient } from "./api.js";
import { layout, type Pt } from "./graph.js";
import { renderPanel, variableRows } from "./panel.js";
import { draw, vertexAt } from "./render.js";
import { Session } from "./state.js";

const api = new ApiClient("");
const session = new Session(api);

const canvas = document.getElementById("quiver") as HTMLCanvasElement;
const panel = document.getElementById("variables") as HTMLElement;
const typeSelect = document.getElementById("type") as HTMLSelectElement;
const status = document.getElementById("status") as HTMLElement;
const undoButton = document.getElementById("undo") as HTMLButtonElement;
const denomToggle = document.getElementById("show-denominators") as HTMLInputElement;
const qtToggle = document.getElementById("show-qt") as HTMLInputElement;

let positions: Map<number, Pt> = new Map();

function redraw(): void {
  const s = session.current;
  if (!s) return;
  positions = layout(s.n, s.arrows, canvas.width, canvas.height, positions);
  draw(canvas, s, positions, { showQt: session.showQt });
  renderPanel(panel, variableRows(s, session.showDenominators));
  status.textContent = `seed ${s.id}  cluster ${s.cluster}  steps ${session.history.length}`;
}

async function loadType(type: string): Promise<void> {
  positions = new Map(); // new rank, new circle
  await session.load(type);
  redraw();
}

canvas.addEventListener("click", (ev) => {
  const rect = canvas.getBoundingClientRect();
  const v = vertexAt(positions, ev.clientX - rect.left, ev.clientY - rect.top);
  if (v === null) return;
  session
    .clickVertex(v)
    .then(redraw)
    .catch((e) => {
      status.textContent = String(e);
    });
});

undoButton.addEventListener("click", () => {
  session
    .undo()
    .then(redraw)
    .catch((e) => {
      status.textContent = String(e);
    });
});

denomToggle.addEventListener("change", () => {
  session.showDenominators = denomToggle.checked;
  redraw();
});

qtToggle.addEventListener("change", () => {
  session.showQt = qtToggle.checked;
  redraw();
});

typeSelect.addEventListener("change", () => {
  void loadType(typeSelect.value);
});

async function start(): Promise<void> {
  const info = await api.types();
  typeSelect.replaceChildren();
  for (const t of info.types) {
    const opt = document.createElement("option");
    opt.value = t;
    opt.textContent = t;
    if (info.gated.includes(t) && !info.allow_large) opt.disabled = true;
    typeSelect.append(opt);
  }
  typeSelect.value = "A2";
  await loadType("A2");
}

void start();
