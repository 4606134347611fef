/**
 * Port signatures derived from a component's kind and params.
 *
 * This must stay a behavioral mirror of the engine's derivation: the
 * studio checks wires locally for instant feedback, and a wire the studio
 * rejects must be exactly a wire the service's validator would reject.
 * Malformed params fall back the same way the engine falls back (invalid
 * expander mode acts like "entities", invalid comparer arity like 2,
 * invalid table input type like EntityList); param problems are surfaced
 * separately, not by changing the signature.
 */

import type { ComponentEntry } from "./document.js";

export type PortType = "EntityList" | "Subgraph" | "WebUri" | "TableRows" | "VizData";

export interface Port {
  name: string;
  type: PortType;
}

const EXPANDER_OUTPUT: Record<string, PortType> = {
  entities: "EntityList",
  cross_graph: "Subgraph",
  internal_graph: "Subgraph",
  web_uri: "WebUri",
};

export const EXPANDER_MODES = Object.keys(EXPANDER_OUTPUT);
export const CHART_KINDS = ["node_link", "sankey"];
export const ENTITY_TYPES = ["Paper", "Concept", "Author", "Journal", "Conference"];

function comparerArity(entry: ComponentEntry): number {
  const arity = entry.params["arity"] ?? 2;
  return typeof arity === "number" && Number.isInteger(arity) && arity >= 2 ? arity : 2;
}

function tableInputType(entry: ComponentEntry): PortType {
  const raw = entry.params["input_type"] ?? "EntityList";
  return raw === "Subgraph" ? "Subgraph" : "EntityList";
}

export function inputPorts(entry: ComponentEntry): Port[] {
  switch (entry.kind) {
    case "querier":
      return [];
    case "expander":
      return [{ name: "in", type: "EntityList" }];
    case "comparer":
      return Array.from({ length: comparerArity(entry) }, (_, i) => ({
        name: `in${i}`,
        type: "Subgraph" as const,
      }));
    case "node_visualizer":
      return [{ name: "in", type: "Subgraph" }];
    case "table_viewer":
      return [{ name: "in", type: tableInputType(entry) }];
    case "node_viewer":
      return [{ name: "in", type: "WebUri" }];
  }
}

export function outputPorts(entry: ComponentEntry): Port[] {
  switch (entry.kind) {
    case "querier":
      return [{ name: "out", type: "EntityList" }];
    case "expander": {
      const mode = entry.params["output_mode"];
      const type = (typeof mode === "string" && EXPANDER_OUTPUT[mode]) || "EntityList";
      return [{ name: "out", type }];
    }
    case "comparer":
      return [{ name: "out", type: "Subgraph" }];
    default:
      return []; // viewers are terminal
  }
}

export function inputPortType(entry: ComponentEntry, name: string): PortType | null {
  return inputPorts(entry).find((port) => port.name === name)?.type ?? null;
}

export function outputPortType(entry: ComponentEntry, name: string): PortType | null {
  return outputPorts(entry).find((port) => port.name === name)?.type ?? null;
}

/** Default params for a freshly added component of each kind. */
export function defaultParams(kind: ComponentEntry["kind"]): Record<string, unknown> {
  switch (kind) {
    case "querier":
      return { terms: [], etype: "Concept", limit: 10 };
    case "expander":
      return { target_type: "Paper", k: 5, output_mode: "entities" };
    case "comparer":
      return { arity: 2 };
    case "node_visualizer":
      return { chart: "node_link" };
    case "table_viewer":
      return { input_type: "EntityList" };
    case "node_viewer":
      return {};
  }
}
