/** DOM and SVG rendering. Flow values are printed verbatim from the API body. */

import { ComparisonRow } from "./compare.js";
import { Edge, Layout } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const NODE_WIDTH = 132;
const NODE_HEIGHT = 40;

export interface OrderRow {
  rankRaw: string;
  player: string;
  phiRaw: string;
  tied: boolean;
}

function changeBadge(change: number | null | undefined): [string, string] {
  if (change === null || change === undefined) return ["new", "change-new"];
  if (change > 0) return [`↑${change}`, "change-up"];
  if (change < 0) return [`↓${-change}`, "change-down"];
  return ["·", "change-none"];
}

export function renderRankingTable(tbody: HTMLTableSectionElement,
                                   rows: readonly OrderRow[],
                                   changes: ReadonlyMap<string, number | null>,
                                   onPick: (player: string) => void): void {
  tbody.replaceChildren();
  for (const row of rows) {
    const tr = document.createElement("tr");
    const [badge, badgeClass] = changeBadge(changes.get(row.player));
    tr.className = badgeClass;

    const rank = document.createElement("td");
    rank.textContent = row.tied ? `${row.rankRaw}=` : row.rankRaw;
    const player = document.createElement("td");
    player.textContent = row.player;
    player.className = "player-name";
    player.addEventListener("click", () => onPick(row.player));
    const phi = document.createElement("td");
    phi.textContent = row.phiRaw;
    phi.className = "numeric";
    const moved = document.createElement("td");
    moved.textContent = badge;

    tr.append(rank, player, phi, moved);
    tbody.append(tr);
  }
}

function svgElement<K extends keyof SVGElementTagNameMap>(
    tag: K, attributes: Record<string, string>): SVGElementTagNameMap[K] {
  const element = document.createElementNS(SVG_NS, tag);
  for (const [name, value] of Object.entries(attributes)) {
    element.setAttribute(name, value);
  }
  return element;
}

export function renderGraph(svg: SVGSVGElement, layout: Layout,
                            edges: readonly Edge[],
                            indifferent: readonly Edge[],
                            phiByPlayer: ReadonlyMap<string, string>,
                            onPick: (player: string) => void): void {
  svg.replaceChildren();
  svg.setAttribute("viewBox", `0 0 ${layout.width + NODE_WIDTH} ${layout.height}`);

  const defs = svgElement("defs", {});
  const marker = svgElement("marker", {
    id: "arrow", viewBox: "0 0 10 10", refX: "9", refY: "5",
    markerWidth: "7", markerHeight: "7", orient: "auto-start-reverse",
  });
  marker.append(svgElement("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#444" }));
  defs.append(marker);
  svg.append(defs);

  const anchor = (id: string) => {
    const node = layout.nodes.get(id);
    if (!node) return null;
    return { x: node.x + NODE_WIDTH / 2, top: node.y, bottom: node.y + NODE_HEIGHT };
  };

  for (const [from, to] of edges) {
    const a = anchor(from);
    const b = anchor(to);
    if (!a || !b) continue;
    svg.append(svgElement("line", {
      x1: String(a.x), y1: String(a.bottom), x2: String(b.x), y2: String(b.top),
      stroke: "#444", "stroke-width": "1.5", "marker-end": "url(#arrow)",
    }));
  }
  for (const [a, b] of indifferent) {
    const from = anchor(a);
    const to = anchor(b);
    if (!from || !to) continue;
    svg.append(svgElement("line", {
      x1: String(from.x), y1: String(from.bottom), x2: String(to.x), y2: String(to.top),
      stroke: "#888", "stroke-width": "1.5", "stroke-dasharray": "6 4",
    }));
  }

  for (const node of layout.nodes.values()) {
    const group = svgElement("g", { class: "graph-node" });
    group.append(svgElement("rect", {
      x: String(node.x), y: String(node.y),
      width: String(NODE_WIDTH), height: String(NODE_HEIGHT),
      rx: "5", fill: "#f4f6fb", stroke: "#30425f",
    }));
    const name = svgElement("text", {
      x: String(node.x + NODE_WIDTH / 2), y: String(node.y + 16),
      "text-anchor": "middle", "font-size": "12", "font-weight": "600",
    });
    name.textContent = node.id;
    const phi = svgElement("text", {
      x: String(node.x + NODE_WIDTH / 2), y: String(node.y + 32),
      "text-anchor": "middle", "font-size": "11", fill: "#555",
    });
    phi.textContent = `φ = ${phiByPlayer.get(node.id) ?? "?"}`;
    group.append(name, phi);
    group.addEventListener("click", () => onPick(node.id));
    svg.append(group);
  }
}

export function renderComparison(container: HTMLElement,
                                 leftName: string | null, rightName: string | null,
                                 rows: readonly ComparisonRow[]): void {
  container.replaceChildren();
  if (!leftName || !rightName) {
    const hint = document.createElement("p");
    hint.className = "hint";
    hint.textContent = "Pick two players (dropdowns above, or click names) to compare.";
    container.append(hint);
    return;
  }
  const table = document.createElement("table");
  const head = table.createTHead().insertRow();
  for (const text of ["criterion", leftName, rightName]) {
    const th = document.createElement("th");
    th.textContent = text;
    head.append(th);
  }
  const body = table.createTBody();
  for (const row of rows) {
    const tr = body.insertRow();
    const label = tr.insertCell();
    label.textContent = row.boosted ? `${row.criterion} ★` : row.criterion;
    if (row.boosted) label.classList.add("boosted");
    const left = tr.insertCell();
    left.textContent = row.left?.raw ?? "n/a";
    const right = tr.insertCell();
    right.textContent = row.right?.raw ?? "n/a";
    left.className = right.className = "numeric";
    if (row.winner === "left") left.classList.add("winner");
    if (row.winner === "right") right.classList.add("winner");
    if (row.winner === "tie") {
      left.classList.add("tie");
      right.classList.add("tie");
    }
  }
  container.append(table);
}

export function showError(banner: HTMLElement, message: string): void {
  banner.textContent = message;
  banner.classList.remove("hidden");
}

export function clearError(banner: HTMLElement): void {
  banner.classList.add("hidden");
  banner.textContent = "";
}
