/**
 * View model for node-link payloads: degrees, hover highlighting, label
 * decluttering, and a deterministic layout. Pure functions over trace
 * payload data; nothing here touches the DOM or invents graph data.
 */

export interface NodeDatum {
  id: string;
  type: string | null;
  label: string;
  degree: number;
}

export interface NodeLinkData {
  nodes: NodeDatum[];
  edges: [string, string][];
}

export interface Point {
  x: number;
  y: number;
}

/** Distinct neighbor ids of `id`; parallel and reversed edges collapse. */
export function neighbors(data: NodeLinkData, id: string): Set<string> {
  const out = new Set<string>();
  for (const [a, b] of data.edges) {
    if (a === id && b !== id) {
      out.add(b);
    }
    if (b === id && a !== id) {
      out.add(a);
    }
  }
  return out;
}

/**
 * Ids highlighted while hovering `id`: the node itself plus its 1-hop
 * neighborhood, sorted for stable rendering. Unknown ids highlight nothing.
 */
export function highlightedNodes(data: NodeLinkData, id: string): string[] {
  if (!data.nodes.some((node) => node.id === id)) {
    return [];
  }
  return [...neighbors(data, id).add(id)].sort();
}

/** Node radius grows with the square root of degree (area ~ degree). */
export function nodeRadius(degree: number): number {
  return 6 + 3 * Math.sqrt(Math.max(0, degree));
}

/**
 * Ids whose labels are drawn. Low-degree labels are hidden to avoid
 * clutter; the threshold adapts so small graphs stay fully labeled.
 */
export function visibleLabels(data: NodeLinkData, maxLabels = 12): Set<string> {
  if (data.nodes.length <= maxLabels) {
    return new Set(data.nodes.map((node) => node.id));
  }
  const byDegree = [...data.nodes].sort(
    (a, b) => b.degree - a.degree || (a.id < b.id ? -1 : 1),
  );
  return new Set(byDegree.slice(0, maxLabels).map((node) => node.id));
}

/** Deterministic circular layout, nodes in payload order. */
export function circularLayout(
  data: NodeLinkData,
  width: number,
  height: number,
): Map<string, Point> {
  const positions = new Map<string, Point>();
  const n = data.nodes.length;
  if (n === 0) {
    return positions;
  }
  const cx = width / 2;
  const cy = height / 2;
  if (n === 1) {
    positions.set(data.nodes[0]!.id, { x: cx, y: cy });
    return positions;
  }
  const radius = Math.min(width, height) / 2 - 28;
  data.nodes.forEach((node, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    positions.set(node.id, {
      x: cx + radius * Math.cos(angle),
      y: cy + radius * Math.sin(angle),
    });
  });
  return positions;
}
