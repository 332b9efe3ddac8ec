/** Facet panel: class tree with instance counts (checkbox filter, subtree
 * semantics surfaced in the copy) and the numeric/date property list. */

import type { ClassFacet, FacetCatalog, PropertyFacet } from "./api.js";
import { axisValue, formatNumber, shortIri } from "./format.js";

export interface FacetCallbacks {
  onToggleClass(iri: string): void;
  onSelectProperty(iri: string): void;
}

function classNode(
  facet: ClassFacet,
  selected: Set<string>,
  callbacks: FacetCallbacks,
): HTMLElement {
  const item = document.createElement("li");
  const row = document.createElement("label");
  row.className = "class-row";
  const box = document.createElement("input");
  box.type = "checkbox";
  box.checked = selected.has(facet.iri);
  box.dataset.classIri = facet.iri;
  box.addEventListener("change", () => callbacks.onToggleClass(facet.iri));
  const text = document.createElement("span");
  text.textContent = `${shortIri(facet.iri)} (${formatNumber(facet.transitiveInstanceCount)})`;
  text.title = facet.iri;
  row.append(box, text);
  item.appendChild(row);
  if (facet.children.length) {
    const children = document.createElement("ul");
    for (const child of facet.children) {
      children.appendChild(classNode(child, selected, callbacks));
    }
    item.appendChild(children);
  }
  return item;
}

function propertyRow(
  facet: PropertyFacet,
  selected: string | null,
  callbacks: FacetCallbacks,
): HTMLElement {
  const temporal = facet.literalKind === "temporal";
  const row = document.createElement("button");
  row.type = "button";
  row.className = "property-row" + (facet.iri === selected ? " selected" : "");
  row.dataset.propertyIri = facet.iri;
  row.title = facet.iri;
  const name = document.createElement("strong");
  name.textContent = shortIri(facet.iri);
  const detail = document.createElement("small");
  detail.textContent =
    `${facet.literalKind} · ${facet.tripleCount} values on ${facet.distinctSubjectCount} subjects · ` +
    `${axisValue(facet.min, facet.minIso, temporal)} … ${axisValue(facet.max, facet.maxIso, temporal)}`;
  row.append(name, detail);
  row.addEventListener("click", () => callbacks.onSelectProperty(facet.iri));
  return row;
}

export function renderFacetPanel(
  host: HTMLElement,
  catalog: FacetCatalog,
  selectedClasses: string[],
  selectedProperty: string | null,
  callbacks: FacetCallbacks,
): void {
  host.textContent = "";
  const selected = new Set(selectedClasses);

  const classHeader = document.createElement("h3");
  classHeader.textContent = "Classes";
  host.appendChild(classHeader);
  const hint = document.createElement("p");
  hint.className = "hint";
  hint.textContent = "selecting a class includes its subclasses";
  host.appendChild(hint);
  if (catalog.classFacets.length) {
    const tree = document.createElement("ul");
    tree.className = "class-tree";
    for (const facet of catalog.classFacets) {
      tree.appendChild(classNode(facet, selected, callbacks));
    }
    host.appendChild(tree);
  } else {
    const none = document.createElement("p");
    none.className = "empty-note";
    none.textContent = "no classes found";
    host.appendChild(none);
  }

  const propHeader = document.createElement("h3");
  propHeader.textContent = "Numeric and date properties";
  host.appendChild(propHeader);
  if (catalog.propertyFacets.length) {
    const list = document.createElement("div");
    list.className = "property-list";
    for (const facet of catalog.propertyFacets) {
      list.appendChild(propertyRow(facet, selectedProperty, callbacks));
    }
    host.appendChild(list);
  } else {
    const none = document.createElement("p");
    none.className = "empty-note";
    none.textContent = "no numeric or date properties";
    host.appendChild(none);
  }
}

/** Inline error with a retry affordance for failed API calls. */
export function renderRetry(host: HTMLElement, message: string, retry: () => void): void {
  host.textContent = "";
  const wrapper = document.createElement("div");
  wrapper.className = "load-error";
  const text = document.createElement("p");
  text.textContent = message;
  const button = document.createElement("button");
  button.type = "button";
  button.textContent = "retry";
  button.addEventListener("click", retry);
  wrapper.append(text, button);
  host.appendChild(wrapper);
}
