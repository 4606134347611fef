/**
 * Canvas state: the pipeline document plus everything the editor needs
 * that is not part of the interchange format (positions, selection, the
 * last execution trace). The document inside is always serializable to
 * the engine schema; save() emits it canonically and nothing else.
 */

import type { ExecutionTrace } from "./api.js";
import type { ComponentEntry, ComponentKind, PipelineDocument } from "./document.js";
import { parseDocument, serializeDocument } from "./document.js";
import { defaultParams } from "./ports.js";
import type { WireCheck } from "./wiring.js";
import { checkWire } from "./wiring.js";

export interface Position {
  x: number;
  y: number;
}

const GRID_X = 240;
const GRID_Y = 170;
const COLUMNS = 4;

export class CanvasState {
  private doc: PipelineDocument = { components: {}, wires: [] };
  readonly positions = new Map<string, Position>();
  selection: string | null = null;
  lastTrace: ExecutionTrace | null = null;

  get document(): PipelineDocument {
    return this.doc;
  }

  componentIds(): string[] {
    return Object.keys(this.doc.components);
  }

  component(id: string): ComponentEntry | null {
    return this.doc.components[id] ?? null;
  }

  /** Adds a component with default params at the next free grid slot. */
  addComponent(kind: ComponentKind): string {
    const id = this.freshId(kind);
    this.doc.components[id] = { kind, params: defaultParams(kind) };
    this.positions.set(id, this.nextSlot());
    this.selection = id;
    return id;
  }

  private freshId(kind: ComponentKind): string {
    const prefix = kind === "node_visualizer" ? "viz" : kind.split("_")[0]!;
    for (let n = 1; ; n += 1) {
      const id = `${prefix}${n}`;
      if (!(id in this.doc.components)) {
        return id;
      }
    }
  }

  private nextSlot(): Position {
    const index = this.positions.size;
    return {
      x: 24 + (index % COLUMNS) * GRID_X,
      y: 24 + Math.floor(index / COLUMNS) * GRID_Y,
    };
  }

  removeComponent(id: string): void {
    if (!(id in this.doc.components)) {
      return;
    }
    delete this.doc.components[id];
    this.positions.delete(id);
    this.doc.wires = this.doc.wires.filter(
      (wire) => !wire.from.startsWith(`${id}.`) && !wire.to.startsWith(`${id}.`),
    );
    if (this.selection === id) {
      this.selection = null;
    }
  }

  setParam(id: string, key: string, value: unknown): void {
    const entry = this.doc.components[id];
    if (!entry) {
      throw new Error(`no component '${id}'`);
    }
    entry.params[key] = value;
    // a type-bearing param change can invalidate existing wires; the
    // validator will flag them, the canvas keeps them for the user to fix
  }

  moveTo(id: string, position: Position): void {
    if (id in this.doc.components) {
      this.positions.set(id, position);
    }
  }

  /** Checks the wire locally; only an accepted wire mutates the document. */
  tryWire(from: string, to: string): WireCheck {
    const check = checkWire(this.doc, from, to);
    if (check.ok) {
      this.doc.wires.push({ from, to });
    }
    return check;
  }

  unwire(from: string, to: string): void {
    this.doc.wires = this.doc.wires.filter(
      (wire) => wire.from !== from || wire.to !== to,
    );
  }

  /** Canonical document text; exactly what the engine accepts. */
  save(): string {
    return serializeDocument(this.doc);
  }

  /** Replaces the canvas with a saved document; positions are relaid. */
  load(text: string): void {
    const doc = parseDocument(text);
    this.doc = doc;
    this.positions.clear();
    this.selection = null;
    this.lastTrace = null;
    for (const id of Object.keys(doc.components)) {
      this.positions.set(id, this.nextSlot());
    }
  }
}
