/**
 * Browser entry point: the pipeline studio.
 *
 * A toolbar adds components to the canvas; cards are dragged by their
 * header; clicking an output pin then an input pin wires them, with
 * rejected wires reported inline using the validator's own text. Run
 * posts the document to the service and binds each component's payload to
 * its embedded view. Save downloads the canonical document; Load restores
 * it. All data on screen originates from service responses.
 */

import { ServiceError, StudioApi, type ExecutionTrace } from "./api.js";
import { CanvasState } from "./canvas.js";
import { COMPONENT_KINDS, type ComponentKind } from "./document.js";
import { inputPorts, outputPorts } from "./ports.js";
import { escapeHtml, renderResult } from "./views.js";

const state = new CanvasState();
let api = new StudioApi(defaultBaseUrl());
let pendingSource: string | null = null;
let hoveredNode: string | null = null;
let inlineNotes = new Map<string, string>();
let statusText = "ready";

function defaultBaseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  return fromQuery ?? "http://127.0.0.1:8040";
}

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) {
    throw new Error(`missing #${id}`);
  }
  return element as T;
}

// -- rendering --------------------------------------------------------

function render(): void {
  renderToolbar();
  renderCanvas();
  renderWires();
  byId("status").textContent = statusText;
}

function renderToolbar(): void {
  const palette = byId("palette");
  if (palette.childElementCount === 0) {
    for (const kind of COMPONENT_KINDS) {
      const button = document.createElement("button");
      button.textContent = `+ ${kind.replace("_", " ")}`;
      button.addEventListener("click", () => {
        state.addComponent(kind as ComponentKind);
        render();
      });
      palette.appendChild(button);
    }
  }
}

function cardHtml(id: string): string {
  const entry = state.component(id)!;
  const note = inlineNotes.get(id);
  const result = state.lastTrace?.components[id];
  const inputs = inputPorts(entry)
    .map(
      (port) =>
        `<button class="pin in" data-endpoint="${id}.${port.name}" title="${port.type}">` +
        `◦ ${port.name}</button>`,
    )
    .join("");
  const outputs = outputPorts(entry)
    .map(
      (port) =>
        `<button class="pin out${pendingSource === `${id}.${port.name}` ? " armed" : ""}"` +
        ` data-endpoint="${id}.${port.name}" title="${port.type}">${port.name} ●</button>`,
    )
    .join("");
  return (
    `<header data-drag="${id}"><span>${id}</span><em>${entry.kind}</em>` +
    `<button class="remove" data-remove="${id}">×</button></header>` +
    `<div class="pins"><span class="inputs">${inputs}</span>` +
    `<span class="outputs">${outputs}</span></div>` +
    `<textarea class="params" data-params="${id}" rows="3">` +
    `${escapeHtml(JSON.stringify(entry.params))}</textarea>` +
    (note ? `<div class="inline-note">${escapeHtml(note)}</div>` : "") +
    `<div class="view">${result ? renderResult(result, hoveredNode) : ""}</div>`
  );
}

function renderCanvas(): void {
  const canvas = byId("canvas");
  const live = new Set(state.componentIds());
  for (const element of [...canvas.querySelectorAll<HTMLElement>(".card")]) {
    if (!live.has(element.dataset["id"] ?? "")) {
      element.remove();
    }
  }
  for (const id of state.componentIds()) {
    let card = canvas.querySelector<HTMLElement>(`.card[data-id="${CSS.escape(id)}"]`);
    if (!card) {
      card = document.createElement("section");
      card.className = "card";
      card.dataset["id"] = id;
      canvas.appendChild(card);
    }
    const at = state.positions.get(id)!;
    card.style.left = `${at.x}px`;
    card.style.top = `${at.y}px`;
    card.innerHTML = cardHtml(id);
  }
}

function pinCenter(endpoint: string): { x: number; y: number } | null {
  const canvas = byId("canvas");
  const pin = canvas.querySelector<HTMLElement>(
    `.pin[data-endpoint="${CSS.escape(endpoint)}"]`,
  );
  if (!pin) {
    return null;
  }
  const pinBox = pin.getBoundingClientRect();
  const canvasBox = canvas.getBoundingClientRect();
  return {
    x: pinBox.left + pinBox.width / 2 - canvasBox.left,
    y: pinBox.top + pinBox.height / 2 - canvasBox.top,
  };
}

function renderWires(): void {
  const overlay = byId("wire-overlay");
  const lines: string[] = [];
  state.document.wires.forEach((wire, index) => {
    const a = pinCenter(wire.from);
    const b = pinCenter(wire.to);
    if (!a || !b) {
      return;
    }
    lines.push(
      `<line data-wire="${index}" x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}">` +
        `<title>${escapeHtml(wire.from)} → ${escapeHtml(wire.to)} (click to remove)</title></line>`,
    );
  });
  overlay.innerHTML = lines.join("");
}

// -- interactions -------------------------------------------------------

function onPinClick(endpoint: string): void {
  const [component = "", port = ""] = endpoint.split(".", 2);
  const entry = state.component(component);
  if (!entry) {
    return;
  }
  if (outputPorts(entry).some((p) => p.name === port)) {
    pendingSource = pendingSource === endpoint ? null : endpoint;
    inlineNotes = new Map();
    render();
    return;
  }
  if (!pendingSource) {
    inlineNotes = new Map([[component, "click an output pin first, then this input"]]);
    render();
    return;
  }
  const check = state.tryWire(pendingSource, endpoint);
  inlineNotes = new Map(check.ok ? [] : [[component, check.message]]);
  pendingSource = null;
  render();
}

function bindCanvasEvents(): void {
  const canvas = byId("canvas");

  canvas.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const pin = target.closest<HTMLElement>(".pin");
    if (pin?.dataset["endpoint"]) {
      onPinClick(pin.dataset["endpoint"]);
      return;
    }
    const remove = target.closest<HTMLElement>("[data-remove]");
    if (remove?.dataset["remove"]) {
      state.removeComponent(remove.dataset["remove"]);
      inlineNotes.delete(remove.dataset["remove"]);
      render();
    }
  });

  canvas.addEventListener("change", (event) => {
    const target = event.target as HTMLElement;
    const id = target.dataset["params"];
    if (!id || !(target instanceof HTMLTextAreaElement)) {
      return;
    }
    try {
      const params = JSON.parse(target.value) as Record<string, unknown>;
      for (const [key, value] of Object.entries(params)) {
        state.setParam(id, key, value);
      }
      for (const key of Object.keys(state.component(id)?.params ?? {})) {
        if (!(key in params)) {
          delete state.component(id)!.params[key];
        }
      }
      inlineNotes.delete(id);
    } catch (error) {
      inlineNotes.set(id, `params are not valid JSON: ${(error as Error).message}`);
    }
    render();
  });

  // hover highlighting inside node-link views
  canvas.addEventListener("pointerover", (event) => {
    const node = (event.target as HTMLElement).closest<SVGElement & HTMLElement>(
      "[data-node-id]",
    );
    const next = node?.dataset["nodeId"] ?? null;
    if (next !== hoveredNode) {
      hoveredNode = next;
      renderCanvas();
      renderWires();
    }
  });

  // dragging by the card header
  let dragging: { id: string; dx: number; dy: number } | null = null;
  canvas.addEventListener("pointerdown", (event) => {
    const header = (event.target as HTMLElement).closest<HTMLElement>("[data-drag]");
    if (!header?.dataset["drag"]) {
      return;
    }
    const id = header.dataset["drag"];
    const at = state.positions.get(id);
    if (!at) {
      return;
    }
    dragging = { id, dx: event.clientX - at.x, dy: event.clientY - at.y };
    canvas.setPointerCapture(event.pointerId);
  });
  canvas.addEventListener("pointermove", (event) => {
    if (!dragging) {
      return;
    }
    state.moveTo(dragging.id, {
      x: Math.max(0, event.clientX - dragging.dx),
      y: Math.max(0, event.clientY - dragging.dy),
    });
    renderCanvas();
    renderWires();
  });
  canvas.addEventListener("pointerup", () => {
    dragging = null;
  });

  byId("wire-overlay").addEventListener("click", (event) => {
    const line = (event.target as Element).closest("line");
    const index = line ? Number(line.getAttribute("data-wire")) : NaN;
    const wire = state.document.wires[index];
    if (wire) {
      state.unwire(wire.from, wire.to);
      render();
    }
  });
}

// -- toolbar actions ------------------------------------------------------

async function runPipeline(): Promise<void> {
  statusText = "running…";
  render();
  try {
    const trace: ExecutionTrace = await api.executePipeline(state.document);
    state.lastTrace = trace;
    inlineNotes = new Map();
    statusText = `ran ${trace.order.length} component(s)`;
  } catch (error) {
    if (error instanceof ServiceError) {
      statusText = `${error.envelope.code}: ${error.envelope.message}`;
      const violations = error.envelope.details["violations"];
      inlineNotes = new Map();
      if (Array.isArray(violations)) {
        for (const violation of violations as {
          message: string;
          components: string[];
        }[]) {
          for (const component of violation.components) {
            inlineNotes.set(component, violation.message);
          }
        }
      }
    } else if ((error as Error).name === "AbortError") {
      return; // superseded by a newer run
    } else {
      statusText = `service unreachable: ${(error as Error).message}`;
    }
  }
  render();
}

async function validatePipeline(): Promise<void> {
  try {
    const result = await api.validatePipeline(state.document);
    inlineNotes = new Map();
    for (const violation of result.violations) {
      for (const component of violation.components) {
        inlineNotes.set(component, violation.message);
      }
    }
    statusText = result.valid ? "pipeline is valid" : `${result.violations.length} violation(s)`;
  } catch (error) {
    statusText = `service unreachable: ${(error as Error).message}`;
  }
  render();
}

function savePipeline(): void {
  const blob = new Blob([state.save()], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = "pipeline.json";
  link.click();
  URL.revokeObjectURL(link.href);
  statusText = "saved pipeline.json";
  render();
}

function loadPipeline(file: File): void {
  void file.text().then((text) => {
    try {
      state.load(text);
      inlineNotes = new Map();
      statusText = `loaded ${file.name}`;
    } catch (error) {
      statusText = `could not load ${file.name}: ${(error as Error).message}`;
    }
    render();
  });
}

function bindToolbar(): void {
  const baseUrl = byId<HTMLInputElement>("base-url");
  baseUrl.value = api.baseUrl;
  baseUrl.addEventListener("change", () => {
    api = new StudioApi(baseUrl.value);
    void checkHealth();
  });
  byId("run").addEventListener("click", () => void runPipeline());
  byId("validate").addEventListener("click", () => void validatePipeline());
  byId("save").addEventListener("click", savePipeline);
  const fileInput = byId<HTMLInputElement>("load-file");
  byId("load").addEventListener("click", () => fileInput.click());
  fileInput.addEventListener("change", () => {
    const file = fileInput.files?.[0];
    if (file) {
      loadPipeline(file);
      fileInput.value = "";
    }
  });
}

async function checkHealth(): Promise<void> {
  try {
    const health = await api.healthz();
    statusText =
      `connected: ${health.total_entities} entities, ` +
      `${health.total_relations} relations (v${health.version})`;
  } catch {
    statusText = `service not reachable at ${api.baseUrl}`;
  }
  render();
}

bindToolbar();
bindCanvasEvents();
render();
void checkHealth();
