/** Group chart: SVG area/bar rendering of one hierarchy level.
 *
 * Bars encode stats.count; tooltips carry the full payload statistics.
 * With a temporal axis the same chart becomes the timeline (ISO labels).
 */

import type { HierarchyNode } from "./api.js";
import { rangeLabel, tooltipLines } from "./format.js";

export interface ChartCallbacks {
  onDrillDown(node: HierarchyNode): void;
  onLeafOpen(node: HierarchyNode): void;
}

const WIDTH = 960;
const HEIGHT = 320;
const GAP = 4;
const LABEL_SPACE = 48;

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderChart(
  host: HTMLElement,
  nodes: HierarchyNode[],
  temporal: boolean,
  callbacks: ChartCallbacks,
): void {
  host.textContent = "";
  if (!nodes.length) {
    const empty = document.createElement("p");
    empty.className = "empty-note";
    empty.textContent = "no groups at this level";
    host.appendChild(empty);
    return;
  }

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT + LABEL_SPACE}`);
  svg.setAttribute("class", temporal ? "group-chart timeline" : "group-chart area");
  svg.setAttribute("role", "list");

  const maxCount = Math.max(...nodes.map((n) => n.stats.count));
  const barWidth = (WIDTH - GAP * (nodes.length + 1)) / nodes.length;

  nodes.forEach((node, index) => {
    const height = maxCount > 0 ? (node.stats.count / maxCount) * (HEIGHT - 10) : 0;
    const x = GAP + index * (barWidth + GAP);
    const y = HEIGHT - height;

    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("role", "listitem");
    group.setAttribute("class", node.isLeaf ? "group-bar leaf" : "group-bar");
    group.setAttribute("data-node-id", node.nodeId);
    group.setAttribute("data-count", String(node.stats.count));

    const rect = document.createElementNS(SVG_NS, "rect");
    rect.setAttribute("x", String(x));
    rect.setAttribute("y", String(y));
    rect.setAttribute("width", String(Math.max(barWidth, 1)));
    rect.setAttribute("height", String(Math.max(height, 1)));
    group.appendChild(rect);

    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = tooltipLines(node, temporal).join("\n");
    group.appendChild(title);

    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(x + barWidth / 2));
    label.setAttribute("y", String(HEIGHT + 16));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "bar-label");
    label.textContent = rangeLabel(node, temporal);
    group.appendChild(label);

    const count = document.createElementNS(SVG_NS, "text");
    count.setAttribute("x", String(x + barWidth / 2));
    count.setAttribute("y", String(Math.max(y - 4, 12)));
    count.setAttribute("text-anchor", "middle");
    count.setAttribute("class", "bar-count");
    count.textContent = String(node.stats.count);
    group.appendChild(count);

    group.addEventListener("click", () => {
      if (node.isLeaf) callbacks.onLeafOpen(node);
      else callbacks.onDrillDown(node);
    });
    svg.appendChild(group);
  });

  host.appendChild(svg);
}

/** Fixed statistics panel mirroring the hover tooltip of a group. */
export function renderGroupDetails(
  host: HTMLElement,
  node: HierarchyNode,
  temporal: boolean,
): void {
  host.textContent = "";
  const list = document.createElement("dl");
  list.className = "group-details";
  for (const line of tooltipLines(node, temporal)) {
    const space = line.indexOf(" ");
    const term = document.createElement("dt");
    term.textContent = line.slice(0, space);
    const value = document.createElement("dd");
    value.textContent = line.slice(space + 1);
    list.append(term, value);
  }
  host.appendChild(list);
}
