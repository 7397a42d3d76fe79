/** Layered drawing of the covering-edge DAG: depth = longest path from a source. */

export type Edge = [string, string];

export interface PlacedNode {
  id: string;
  depth: number;
  x: number;
  y: number;
}

export interface Layout {
  nodes: Map<string, PlacedNode>;
  width: number;
  height: number;
}

export function longestPathDepths(nodes: readonly string[],
                                  edges: readonly Edge[]): Map<string, number> {
  const indegree = new Map<string, number>();
  const outgoing = new Map<string, string[]>();
  for (const node of nodes) {
    indegree.set(node, 0);
    outgoing.set(node, []);
  }
  for (const [from, to] of edges) {
    if (!indegree.has(from) || !indegree.has(to)) {
      throw new Error(`edge ${from}->${to} references an unknown node`);
    }
    outgoing.get(from)!.push(to);
    indegree.set(to, indegree.get(to)! + 1);
  }
  const ready = nodes.filter((node) => indegree.get(node) === 0);
  const order: string[] = [];
  while (ready.length > 0) {
    const node = ready.pop()!;
    order.push(node);
    for (const next of outgoing.get(node)!) {
      const remaining = indegree.get(next)! - 1;
      indegree.set(next, remaining);
      if (remaining === 0) ready.push(next);
    }
  }
  if (order.length !== nodes.length) throw new Error("graph contains a cycle");

  const depth = new Map<string, number>(nodes.map((node) => [node, 0]));
  for (const node of order) {
    const base = depth.get(node)!;
    for (const next of outgoing.get(node)!) {
      depth.set(next, Math.max(depth.get(next)!, base + 1));
    }
  }
  return depth;
}

export interface LayoutOptions {
  columnGap?: number;
  layerGap?: number;
  margin?: number;
  /** Orders nodes inside a layer, best first. */
  score?: (id: string) => number;
}

export function layeredLayout(nodes: readonly string[], edges: readonly Edge[],
                              options: LayoutOptions = {}): Layout {
  const columnGap = options.columnGap ?? 150;
  const layerGap = options.layerGap ?? 90;
  const margin = options.margin ?? 60;
  const score = options.score ?? (() => 0);

  const depths = longestPathDepths(nodes, edges);
  const layers = new Map<number, string[]>();
  for (const node of nodes) {
    const depth = depths.get(node)!;
    const layer = layers.get(depth) ?? [];
    layer.push(node);
    layers.set(depth, layer);
  }

  const placed = new Map<string, PlacedNode>();
  let widestLayer = 1;
  for (const [depth, members] of layers) {
    members.sort((a, b) => score(b) - score(a) || a.localeCompare(b));
    widestLayer = Math.max(widestLayer, members.length);
    members.forEach((id, column) => {
      placed.set(id, {
        id,
        depth,
        x: margin + column * columnGap,
        y: margin + depth * layerGap,
      });
    });
  }
  return {
    nodes: placed,
    width: 2 * margin + (widestLayer - 1) * columnGap,
    height: 2 * margin + Math.max(0, layers.size - 1) * layerGap,
  };
}
