/** Display formatting. Strictly presentational: numbers are rendered from
 * API payload fields as-is, never derived on the client. */

import type { GroupStats, HierarchyNode } from "./api.js";

export function formatNumber(value: number): string {
  if (Number.isInteger(value) && Math.abs(value) < 1e15) {
    return value.toLocaleString("en-US");
  }
  return String(value);
}

export function axisValue(value: number, iso: string | undefined, temporal: boolean): string {
  if (temporal && iso) return iso;
  return formatNumber(value);
}

export function rangeLabel(node: HierarchyNode, temporal: boolean): string {
  const lo = axisValue(node.lo, node.loIso, temporal);
  const hi = axisValue(node.hi, node.hiIso, temporal);
  const close = node.closure === "closed" ? "]" : ")";
  return `[${lo}, ${hi}${close}`;
}

/** Tooltip lines for a group; values are payload fields verbatim. */
export function tooltipLines(node: HierarchyNode, temporal: boolean): string[] {
  const stats: GroupStats = node.stats;
  const lines = [
    `range ${rangeLabel(node, temporal)}`,
    `count ${stats.count}`,
    `min ${axisValue(stats.min, stats.minIso, temporal)}`,
    `max ${axisValue(stats.max, stats.maxIso, temporal)}`,
    `mean ${stats.mean}`,
    `variance ${stats.variance}`,
  ];
  for (const sample of stats.samples) {
    lines.push(`sample ${sample.subject} = ${axisValue(sample.value, sample.valueIso, temporal)}`);
  }
  return lines;
}

export function shortIri(iri: string): string {
  const cut = Math.max(iri.lastIndexOf("#"), iri.lastIndexOf("/"));
  const tail = cut >= 0 ? iri.slice(cut + 1) : iri;
  return tail || iri;
}
