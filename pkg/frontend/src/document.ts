/**
 * Pipeline documents: the JSON interchange format shared with the engine.
 *
 * The studio never invents its own schema; a saved file is exactly the
 * document the engine accepts, so parse mirrors the engine's structural
 * checks and serialize emits a canonical layout (components then wires,
 * kind then params, from then to, two-space indent, trailing newline).
 * serialize(parse(serialize(doc))) is byte-identical to serialize(doc).
 */

export const COMPONENT_KINDS = [
  "querier",
  "expander",
  "comparer",
  "node_visualizer",
  "table_viewer",
  "node_viewer",
] as const;

export type ComponentKind = (typeof COMPONENT_KINDS)[number];

export interface ComponentEntry {
  kind: ComponentKind;
  params: Record<string, unknown>;
}

export interface WireEntry {
  from: string;
  to: string;
}

export interface PipelineDocument {
  components: Record<string, ComponentEntry>;
  wires: WireEntry[];
}

export class DocumentFormatError extends Error {
  override name = "DocumentFormatError";
}

export interface Endpoint {
  component: string;
  port: string;
}

/** "q1.out" -> {component: "q1", port: "out"}; rejects malformed endpoints. */
export function splitEndpoint(raw: string, where: string): Endpoint {
  const dot = raw.indexOf(".");
  if (dot < 1 || dot === raw.length - 1) {
    throw new DocumentFormatError(
      `${where}: endpoint ${JSON.stringify(raw)} must look like "component.port"`,
    );
  }
  return { component: raw.slice(0, dot), port: raw.slice(dot + 1) };
}

function isPlainObject(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function checkComponentEntry(id: string, raw: unknown): ComponentEntry {
  if (id.includes(".")) {
    throw new DocumentFormatError(`component id ${JSON.stringify(id)} may not contain "."`);
  }
  if (!isPlainObject(raw)) {
    throw new DocumentFormatError(`component ${JSON.stringify(id)} must be an object`);
  }
  const kind = raw["kind"];
  if (typeof kind !== "string" || !(COMPONENT_KINDS as readonly string[]).includes(kind)) {
    throw new DocumentFormatError(`unknown component kind: ${JSON.stringify(kind)}`);
  }
  const params = raw["params"] ?? {};
  if (!isPlainObject(params)) {
    throw new DocumentFormatError(`component ${JSON.stringify(id)}: 'params' must be an object`);
  }
  return { kind: kind as ComponentKind, params };
}

function checkWireEntry(raw: unknown, index: number): WireEntry {
  if (!isPlainObject(raw) || typeof raw["from"] !== "string" || typeof raw["to"] !== "string") {
    throw new DocumentFormatError(
      `wires[${index}] must be an object with string 'from' and 'to'`,
    );
  }
  const from = raw["from"];
  const to = raw["to"];
  splitEndpoint(from, `wires[${index}].from`);
  splitEndpoint(to, `wires[${index}].to`);
  return { from, to };
}

/** Structural validation of an already-parsed JSON value. */
export function checkDocument(value: unknown): PipelineDocument {
  if (!isPlainObject(value)) {
    throw new DocumentFormatError("pipeline document must be a JSON object");
  }
  const rawComponents = value["components"];
  if (!isPlainObject(rawComponents)) {
    throw new DocumentFormatError("'components' must be an object of component entries");
  }
  const components: Record<string, ComponentEntry> = {};
  for (const [id, entry] of Object.entries(rawComponents)) {
    components[id] = checkComponentEntry(id, entry);
  }
  const rawWires = value["wires"] ?? [];
  if (!Array.isArray(rawWires)) {
    throw new DocumentFormatError("'wires' must be an array");
  }
  const wires = rawWires.map((entry, index) => checkWireEntry(entry, index));
  return { components, wires };
}

export function parseDocument(text: string): PipelineDocument {
  let value: unknown;
  try {
    value = JSON.parse(text);
  } catch (error) {
    throw new DocumentFormatError(`not valid JSON: ${(error as Error).message}`);
  }
  return checkDocument(value);
}

/** Canonical text form; this is what Save downloads. */
export function serializeDocument(doc: PipelineDocument): string {
  const canonical = {
    components: Object.fromEntries(
      Object.entries(doc.components).map(([id, entry]) => [
        id,
        { kind: entry.kind, params: entry.params },
      ]),
    ),
    wires: doc.wires.map((wire) => ({ from: wire.from, to: wire.to })),
  };
  return JSON.stringify(canonical, null, 2) + "\n";
}

export function cloneDocument(doc: PipelineDocument): PipelineDocument {
  return checkDocument(JSON.parse(serializeDocument(doc)));
}
