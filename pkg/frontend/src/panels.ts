/** Statistics, metadata, treemap and raw-points views. All numbers come
 * from the API payloads unchanged. */

import type { PointsResponse, TreemapNode } from "./api.js";
import { formatNumber, shortIri } from "./format.js";
import { squarify } from "./treemap.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function definitionTable(host: HTMLElement, title: string, rows: [string, unknown][]): void {
  const heading = document.createElement("h3");
  heading.textContent = title;
  host.appendChild(heading);
  const table = document.createElement("table");
  table.className = "kv-table";
  for (const [key, value] of rows) {
    const tr = document.createElement("tr");
    const th = document.createElement("th");
    th.textContent = key;
    const td = document.createElement("td");
    td.textContent = typeof value === "number" ? formatNumber(value) : String(value);
    tr.append(th, td);
    table.appendChild(tr);
  }
  host.appendChild(table);
}

function rankingTable(host: HTMLElement, title: string, rows: { iri: string; count: number }[]): void {
  if (!rows.length) return;
  const heading = document.createElement("h4");
  heading.textContent = title;
  host.appendChild(heading);
  const table = document.createElement("table");
  table.className = "ranking-table";
  for (const row of rows) {
    const tr = document.createElement("tr");
    const name = document.createElement("td");
    name.textContent = shortIri(row.iri);
    name.title = row.iri;
    const count = document.createElement("td");
    count.textContent = formatNumber(row.count);
    tr.append(name, count);
    table.appendChild(tr);
  }
  host.appendChild(table);
}

export function renderStatsPanel(host: HTMLElement, stats: any): void {
  host.textContent = "";
  definitionTable(host, "Data level", Object.entries(stats.dataLevel));
  const schema = { ...stats.schemaLevel } as Record<string, unknown>;
  const topClasses = schema.topClasses as { iri: string; instanceCount: number }[];
  const topProperties = schema.topProperties as { iri: string; tripleCount: number }[];
  delete schema.topClasses;
  delete schema.topProperties;
  definitionTable(host, "Schema level", Object.entries(schema));
  rankingTable(
    host,
    "Most common classes",
    topClasses.map((row) => ({ iri: row.iri, count: row.instanceCount })),
  );
  rankingTable(
    host,
    "Most common properties",
    topProperties.map((row) => ({ iri: row.iri, count: row.tripleCount })),
  );
  const structure = { ...stats.structureLevel } as Record<string, unknown>;
  const topIn = structure.topInDegreeEntities as { iri: string; inDegree: number }[];
  const topOut = structure.topOutDegreeEntities as { iri: string; outDegree: number }[];
  delete structure.topInDegreeEntities;
  delete structure.topOutDegreeEntities;
  definitionTable(host, "Structure level", Object.entries(structure));
  rankingTable(host, "Top in-degree entities", topIn.map((r) => ({ iri: r.iri, count: r.inDegree })));
  rankingTable(host, "Top out-degree entities", topOut.map((r) => ({ iri: r.iri, count: r.outDegree })));
}

export function renderMetadataPanel(
  host: HTMLElement,
  metadata: { found: boolean; entries: any[] },
): void {
  host.textContent = "";
  if (!metadata.found) {
    const none = document.createElement("p");
    none.className = "empty-note";
    none.textContent = "no metadata found";
    host.appendChild(none);
    return;
  }
  const table = document.createElement("table");
  table.className = "metadata-table";
  const head = document.createElement("tr");
  for (const column of ["category", "predicate", "subject", "value"]) {
    const th = document.createElement("th");
    th.textContent = column;
    head.appendChild(th);
  }
  table.appendChild(head);
  for (const entry of metadata.entries) {
    const tr = document.createElement("tr");
    for (const text of [entry.category, shortIri(entry.predicate), shortIri(entry.subject), entry.valueText]) {
      const td = document.createElement("td");
      td.textContent = String(text);
      tr.appendChild(td);
    }
    tr.title = entry.predicate;
    table.appendChild(tr);
  }
  host.appendChild(table);
}

export interface TreemapCallbacks {
  onZoom(classIri: string): void;
  onInspect(node: TreemapNode): void;
}

export function renderTreemap(
  host: HTMLElement,
  root: TreemapNode,
  callbacks: TreemapCallbacks,
): void {
  host.textContent = "";
  const width = 960;
  const height = 540;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "treemap");

  const tiles = root.children.length
    ? squarify(root.children, (n) => n.transitiveInstanceCount, { x: 0, y: 0, w: width, h: height })
    : squarify([root], (n) => n.transitiveInstanceCount, { x: 0, y: 0, w: width, h: height });

  for (const tile of tiles) {
    const node = tile.item;
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "treemap-tile");
    if (node.classIri) group.setAttribute("data-class-iri", node.classIri);
    group.setAttribute("data-weight", String(node.transitiveInstanceCount));

    const rect = document.createElementNS(SVG_NS, "rect");
    rect.setAttribute("x", String(tile.rect.x + 1));
    rect.setAttribute("y", String(tile.rect.y + 1));
    rect.setAttribute("width", String(Math.max(tile.rect.w - 2, 1)));
    rect.setAttribute("height", String(Math.max(tile.rect.h - 2, 1)));
    group.appendChild(rect);

    const title = document.createElementNS(SVG_NS, "title");
    title.textContent =
      `${node.label}\ninstances ${node.transitiveInstanceCount} (direct ${node.directInstanceCount})\n` +
      `subclasses ${node.subclassCount}\n` +
      `datatype properties ${node.datatypePropertyCount}\nobject properties ${node.objectPropertyCount}`;
    group.appendChild(title);

    if (tile.rect.w > 40 && tile.rect.h > 18) {
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(tile.rect.x + 6));
      label.setAttribute("y", String(tile.rect.y + 16));
      label.setAttribute("class", "tile-label");
      label.textContent = `${node.label} (${node.transitiveInstanceCount})`;
      group.appendChild(label);
    }

    group.addEventListener("click", () => {
      callbacks.onInspect(node);
      if (node.classIri) callbacks.onZoom(node.classIri);
    });
    svg.appendChild(group);
  }
  host.appendChild(svg);
}

export function renderClassDetail(host: HTMLElement, node: TreemapNode): void {
  host.textContent = "";
  definitionTable(host, node.label, [
    ["class", node.classIri ?? "(all classes)"],
    ["instances", node.transitiveInstanceCount],
    ["direct instances", node.directInstanceCount],
    ["subclasses", node.subclassCount],
    ["datatype properties", node.datatypePropertyCount],
    ["object properties", node.objectPropertyCount],
  ]);
  if (node.propertyDetails && node.propertyDetails.length) {
    const heading = document.createElement("h4");
    heading.textContent = "Properties";
    host.appendChild(heading);
    const table = document.createElement("table");
    table.className = "property-detail-table";
    for (const detail of node.propertyDetails) {
      const tr = document.createElement("tr");
      const name = document.createElement("td");
      name.textContent = shortIri(detail.iri);
      name.title = detail.iri;
      const cardinality = document.createElement("td");
      cardinality.textContent = String(detail.cardinality);
      const bounds = document.createElement("td");
      bounds.textContent =
        detail.valueMin === null
          ? ""
          : `${detail.valueMinIso ?? detail.valueMin} … ${detail.valueMaxIso ?? detail.valueMax}`;
      tr.append(name, cardinality, bounds);
      table.appendChild(tr);
    }
    host.appendChild(table);
  } else if (node.propertyDetailsDeferred) {
    const note = document.createElement("p");
    note.className = "hint";
    note.textContent = "property details deferred (large class); fetch via /class-properties";
    host.appendChild(note);
  }
}

export interface PointsCallbacks {
  onPage(offset: number): void;
}

export function renderPointsTable(
  host: HTMLElement,
  page: PointsResponse,
  temporal: boolean,
  callbacks: PointsCallbacks,
): void {
  host.textContent = "";
  const heading = document.createElement("h3");
  heading.textContent = `raw values (${page.total} points)`;
  host.appendChild(heading);

  const table = document.createElement("table");
  table.className = "points-table";
  const head = document.createElement("tr");
  for (const column of ["subject", "value", "source"]) {
    const th = document.createElement("th");
    th.textContent = column;
    head.appendChild(th);
  }
  table.appendChild(head);
  for (const row of page.points) {
    const tr = document.createElement("tr");
    const subject = document.createElement("td");
    subject.textContent = row.subject;
    const value = document.createElement("td");
    value.textContent = temporal && row.valueIso ? row.valueIso : String(row.value);
    const source = document.createElement("td");
    source.textContent = row.source ?? "";
    source.className = "point-source";
    tr.append(subject, value, source);
    table.appendChild(tr);
  }
  host.appendChild(table);

  const nav = document.createElement("div");
  nav.className = "points-nav";
  const prev = document.createElement("button");
  prev.type = "button";
  prev.textContent = "previous page";
  prev.disabled = page.offset === 0;
  prev.addEventListener("click", () => callbacks.onPage(Math.max(page.offset - page.limit, 0)));
  const next = document.createElement("button");
  next.type = "button";
  next.textContent = "next page";
  next.disabled = page.offset + page.limit >= page.total;
  next.addEventListener("click", () => callbacks.onPage(page.offset + page.limit));
  const where = document.createElement("span");
  where.textContent = `${page.offset + 1}–${Math.min(page.offset + page.limit, page.total)} of ${page.total}`;
  nav.append(prev, where, next);
  host.appendChild(nav);
}
