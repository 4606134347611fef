/**
 * Embedded component views: trace payloads rendered to HTML/SVG strings.
 *
 * Pure string renderers so they are testable without a DOM. Every datum
 * drawn here comes from a trace payload returned by the service; when a
 * payload does not fit the view, a placeholder with a message is rendered
 * instead of guessing.
 */

import type { ComponentResult } from "./api.js";
import {
  circularLayout,
  highlightedNodes,
  nodeRadius,
  visibleLabels,
  type NodeLinkData,
} from "./graphview.js";

const SVG_WIDTH = 220;
const SVG_HEIGHT = 170;

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function placeholder(message: string): string {
  return `<div class="view-placeholder">${escapeHtml(message)}</div>`;
}

function shortName(iri: string): string {
  const tail = iri.split("/").pop() ?? iri;
  return decodeURIComponent(tail);
}

function isStringArray(value: unknown): value is string[] {
  return Array.isArray(value) && value.every((item) => typeof item === "string");
}

function asNodeLink(payload: Record<string, unknown>): NodeLinkData | null {
  const nodes = payload["nodes"];
  const edges = payload["edges"];
  if (!Array.isArray(nodes) || !Array.isArray(edges)) {
    return null;
  }
  return {
    nodes: nodes as NodeLinkData["nodes"],
    edges: edges as NodeLinkData["edges"],
  };
}

export function renderEntityList(payload: Record<string, unknown>): string {
  const iris = payload["iris"];
  if (!isStringArray(iris)) {
    return placeholder("payload is not an entity list");
  }
  if (iris.length === 0) {
    return placeholder("no entities");
  }
  const items = iris
    .map((iri) => `<li title="${escapeHtml(iri)}">${escapeHtml(shortName(iri))}</li>`)
    .join("");
  return `<ol class="entity-list">${items}</ol>`;
}

export function renderTable(payload: Record<string, unknown>): string {
  const columns = payload["columns"];
  const rows = payload["rows"];
  if (!isStringArray(columns) || !Array.isArray(rows)) {
    return placeholder("payload is not a table");
  }
  if (rows.length === 0) {
    return placeholder("empty table");
  }
  const head = columns.map((c) => `<th>${escapeHtml(c)}</th>`).join("");
  const body = rows
    .map(
      (row) =>
        `<tr>${(row as string[]).map((cell) => `<td>${escapeHtml(cell)}</td>`).join("")}</tr>`,
    )
    .join("");
  return `<table class="rows-table"><thead><tr>${head}</tr></thead><tbody>${body}</tbody></table>`;
}

export function renderWebUri(payload: Record<string, unknown>): string {
  const uri = payload["uri"];
  const concept = payload["concept"];
  if (typeof uri !== "string" || !uri) {
    return placeholder(
      typeof concept === "string" && concept
        ? "selected concept has no external resource"
        : "no concept selected",
    );
  }
  const label = typeof concept === "string" ? shortName(concept) : uri;
  return (
    `<div class="node-viewer">` +
    `<a href="${escapeHtml(uri)}" target="_blank" rel="noopener">${escapeHtml(label)}</a>` +
    `<iframe src="${escapeHtml(uri)}" title="external resource"></iframe>` +
    `</div>`
  );
}

/**
 * Node-link SVG: radius from degree, labels decluttered, hovered node and
 * its 1-hop neighborhood carry the "hl" class.
 */
export function renderNodeLink(
  payload: Record<string, unknown>,
  hovered: string | null = null,
): string {
  const data = asNodeLink(payload);
  if (data === null) {
    return placeholder("payload is not a node-link graph");
  }
  if (data.nodes.length === 0) {
    return placeholder("empty graph");
  }
  const positions = circularLayout(data, SVG_WIDTH, SVG_HEIGHT);
  const labeled = visibleLabels(data);
  const highlighted = new Set(hovered ? highlightedNodes(data, hovered) : []);
  const seen = new Set<string>();
  const edgeLines: string[] = [];
  for (const [a, b] of data.edges) {
    const key = a < b ? `${a}|${b}` : `${b}|${a}`;
    if (seen.has(key) || a === b) {
      continue;
    }
    seen.add(key);
    const pa = positions.get(a);
    const pb = positions.get(b);
    if (!pa || !pb) {
      continue;
    }
    const lit = highlighted.has(a) && highlighted.has(b);
    edgeLines.push(
      `<line class="edge${lit ? " hl" : ""}" x1="${pa.x.toFixed(1)}" y1="${pa.y.toFixed(1)}"` +
        ` x2="${pb.x.toFixed(1)}" y2="${pb.y.toFixed(1)}"></line>`,
    );
  }
  const circles = data.nodes
    .map((node) => {
      const at = positions.get(node.id)!;
      const classes = ["node", `t-${(node.type ?? "unknown").toLowerCase()}`];
      if (highlighted.has(node.id)) {
        classes.push("hl");
      }
      const label = labeled.has(node.id)
        ? `<text x="${at.x.toFixed(1)}" y="${(at.y - nodeRadius(node.degree) - 3).toFixed(1)}">` +
          `${escapeHtml(node.label)}</text>`
        : "";
      return (
        `<g class="${classes.join(" ")}" data-node-id="${escapeHtml(node.id)}">` +
        `<circle cx="${at.x.toFixed(1)}" cy="${at.y.toFixed(1)}"` +
        ` r="${nodeRadius(node.degree).toFixed(1)}"><title>${escapeHtml(node.label)}</title>` +
        `</circle>${label}</g>`
      );
    })
    .join("");
  return (
    `<svg class="node-link" viewBox="0 0 ${SVG_WIDTH} ${SVG_HEIGHT}">` +
    edgeLines.join("") +
    circles +
    `</svg>`
  );
}

/** Sankey: one column per semantic-role group, links weighted by co-occurrence. */
export function renderSankey(payload: Record<string, unknown>): string {
  const groups = payload["groups"];
  const links = payload["links"];
  if (typeof groups !== "object" || groups === null || !Array.isArray(links)) {
    return placeholder("payload is not a sankey chart");
  }
  const groupEntries = Object.entries(groups as Record<string, string[]>);
  if (groupEntries.length === 0) {
    return placeholder("no grouped concepts");
  }
  const positions = new Map<string, { x: number; y: number }>();
  const columnWidth = SVG_WIDTH / Math.max(1, groupEntries.length);
  const parts: string[] = [];
  groupEntries.forEach(([role, members], column) => {
    const x = columnWidth * column + columnWidth / 2;
    parts.push(
      `<text class="group-label" x="${x.toFixed(1)}" y="14">${escapeHtml(role)}</text>`,
    );
    members.forEach((iri, row) => {
      const y = 34 + row * 26;
      positions.set(iri, { x, y });
      parts.push(
        `<g class="sankey-node" data-node-id="${escapeHtml(iri)}">` +
          `<rect x="${(x - 45).toFixed(1)}" y="${(y - 10).toFixed(1)}" width="90" height="20"></rect>` +
          `<text x="${x.toFixed(1)}" y="${(y + 4).toFixed(1)}">${escapeHtml(shortName(iri))}</text></g>`,
      );
    });
  });
  const ribbons: string[] = [];
  for (const link of links as { source: string; target: string; weight: number }[]) {
    const a = positions.get(link.source);
    const b = positions.get(link.target);
    if (!a || !b) {
      continue;
    }
    ribbons.push(
      `<line class="sankey-link" stroke-width="${Math.max(1, link.weight)}"` +
        ` x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}">` +
        `<title>${escapeHtml(shortName(link.source))} — ${escapeHtml(shortName(link.target))}` +
        ` (${link.weight})</title></line>`,
    );
  }
  const height = Math.max(
    SVG_HEIGHT,
    40 + 26 * Math.max(...groupEntries.map(([, members]) => members.length)),
  );
  return (
    `<svg class="sankey" viewBox="0 0 ${SVG_WIDTH} ${height}">` +
    ribbons.join("") +
    parts.join("") +
    `</svg>`
  );
}

function renderVizData(payload: Record<string, unknown>, hovered: string | null): string {
  const chart = payload["chart"];
  if (chart === "node_link") {
    return renderNodeLink(payload, hovered);
  }
  if (chart === "sankey") {
    return renderSankey(payload);
  }
  return placeholder(`unknown chart kind: ${String(chart)}`);
}

export function renderSubgraphSummary(payload: Record<string, unknown>): string {
  const nodes = payload["nodes"];
  const edges = payload["edges"];
  if (!isStringArray(nodes) || !Array.isArray(edges)) {
    return placeholder("payload is not a subgraph");
  }
  const common = payload["common"];
  const commonNote = isStringArray(common) ? `, ${common.length} common` : "";
  if (nodes.length === 0) {
    return placeholder("empty subgraph");
  }
  const items = nodes
    .map((iri) => {
      const mark = isStringArray(common) && common.includes(iri) ? " class=\"common\"" : "";
      return `<li${mark} title="${escapeHtml(iri)}">${escapeHtml(shortName(iri))}</li>`;
    })
    .join("");
  return (
    `<div class="subgraph-summary">${nodes.length} nodes, ${edges.length} edges${commonNote}` +
    `<ul>${items}</ul></div>`
  );
}

/** Dispatches a component result to the right view for its output port. */
export function renderResult(result: ComponentResult, hovered: string | null = null): string {
  if (result.status === "skipped") {
    return placeholder(result.error ?? "skipped");
  }
  if (result.status === "error") {
    return `<div class="view-error">${escapeHtml(result.error ?? "error")}</div>`;
  }
  if (result.payload === null) {
    return placeholder("no output");
  }
  switch (result.port) {
    case "EntityList":
      return renderEntityList(result.payload);
    case "Subgraph":
      return renderSubgraphSummary(result.payload);
    case "TableRows":
      return renderTable(result.payload);
    case "WebUri":
      return renderWebUri(result.payload);
    case "VizData":
      return renderVizData(result.payload, hovered);
    default:
      return placeholder(`no view for port type ${String(result.port)}`);
  }
}
