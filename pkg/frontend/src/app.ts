/** Explorer controller: owns the state, talks to the API, renders views.
 *
 * All data fetching funnels through run() so tests can await idle();
 * responses render only if they belong to the latest state (the API client
 * aborts superseded requests of the same kind).
 */

import {
  ApiClient,
  DatasetListing,
  FacetCatalog,
  HierarchyNode,
  HierarchyResponse,
  RequestFailed,
  TreemapNode,
} from "./api.js";
import { renderChart, renderGroupDetails } from "./chart.js";
import { renderFacetPanel, renderRetry } from "./facets.js";
import {
  renderClassDetail,
  renderMetadataPanel,
  renderPointsTable,
  renderStatsPanel,
  renderTreemap,
} from "./panels.js";
import {
  ConfigValidationError,
  ExplorerState,
  HierarchyConfigState,
  drillDown as drillDownState,
  initialState,
  navigationPath,
  reconfigure as reconfigureState,
  rollUp as rollUpState,
  selectDataset as selectDatasetState,
  selectProperty as selectPropertyState,
  setTreemapRoot,
  setView,
  stateFromHash,
  stateToHash,
  toggleClass as toggleClassState,
  validateConfig,
} from "./state.js";
import { rangeLabel } from "./format.js";

const POINT_PAGE = 50;

interface Elements {
  datasetSelect: HTMLSelectElement;
  facetPanel: HTMLElement;
  breadcrumb: HTMLElement;
  main: HTMLElement;
  detail: HTMLElement;
  tabs: HTMLElement;
  configForm: HTMLFormElement;
  error: HTMLElement;
}

export class ExplorerApp {
  state: ExplorerState = initialState();
  readonly api: ApiClient;
  private readonly win: Window;
  private readonly elements: Elements;

  private datasets: DatasetListing[] = [];
  private catalog: FacetCatalog | null = null;
  private treeToken: string | null = null;
  private axisKind: "numeric" | "temporal" = "numeric";
  private nodeCache = new Map<string, HierarchyNode>();
  private pointsOffset = 0;
  private pending = 0;
  private idleWaiters: (() => void)[] = [];
  private suppressHash = false;

  private readonly onHashChange: () => void;

  constructor(container: HTMLElement, apiBase: string, win: Window = window) {
    this.api = new ApiClient(apiBase);
    this.win = win;
    this.elements = buildSkeleton(container);
    this.bindStaticHandlers();
    this.onHashChange = () => {
      if (!this.suppressHash) void this.applyState(stateFromHash(win.location.hash));
    };
    win.addEventListener("hashchange", this.onHashChange);
  }

  /** Detach from the window (tests mount several apps per page). */
  dispose(): void {
    this.win.removeEventListener("hashchange", this.onHashChange);
  }

  // --- lifecycle -----------------------------------------------------------

  async start(): Promise<void> {
    await this.run(async () => {
      this.datasets = await this.api.datasets();
      this.renderDatasetSelect();
    });
    await this.applyState(stateFromHash(this.win.location.hash));
  }

  /** Resolves once every in-flight operation has finished. */
  idle(): Promise<void> {
    if (this.pending === 0) return Promise.resolve();
    return new Promise((resolve) => this.idleWaiters.push(resolve));
  }

  private async run<T>(work: () => Promise<T>): Promise<T | undefined> {
    this.pending += 1;
    try {
      return await work();
    } catch (error) {
      if ((error as Error).name === "AbortError") return undefined;
      this.showError(error);
      return undefined;
    } finally {
      this.pending -= 1;
      if (this.pending === 0) {
        const waiters = this.idleWaiters.splice(0);
        for (const wake of waiters) wake();
      }
    }
  }

  // --- public actions (awaitable; also wired to DOM events) ----------------

  async selectDataset(datasetId: string): Promise<void> {
    await this.applyState(selectDatasetState(this.state, datasetId));
  }

  async selectProperty(iri: string): Promise<void> {
    await this.applyState(selectPropertyState(this.state, iri));
  }

  async toggleClass(iri: string): Promise<void> {
    await this.applyState(toggleClassState(this.state, iri));
  }

  async drillDown(nodeId: string): Promise<void> {
    await this.applyState(drillDownState(this.state, nodeId));
  }

  async rollUp(): Promise<void> {
    await this.applyState(rollUpState(this.state));
  }

  async reconfigure(config: HierarchyConfigState): Promise<void> {
    await this.applyState(reconfigureState(this.state, config));
  }

  async showView(view: ExplorerState["view"]): Promise<void> {
    await this.applyState(setView(this.state, view));
  }

  async zoomTreemap(classIri: string | null): Promise<void> {
    await this.applyState(setTreemapRoot(this.state, classIri));
  }

  /** Deep-link entry: apply a URL hash directly. */
  async openHash(hash: string): Promise<void> {
    await this.applyState(stateFromHash(hash));
  }

  // --- state/core ----------------------------------------------------------

  private async applyState(next: ExplorerState): Promise<void> {
    const facetsChanged =
      next.datasetId !== this.state.datasetId ||
      next.propertyIri !== this.state.propertyIri ||
      next.classIris.join(",") !== this.state.classIris.join(",") ||
      JSON.stringify(next.config) !== JSON.stringify(this.state.config);
    this.state = next;
    if (facetsChanged) {
      this.treeToken = null;
      this.nodeCache.clear();
    }
    this.pointsOffset = 0;
    this.writeHash();
    this.clearError();
    await this.refresh();
  }

  private writeHash(): void {
    const hash = stateToHash(this.state);
    if (this.win.location.hash !== hash) {
      this.suppressHash = true;
      this.win.location.hash = hash;
      // reset after the synchronous dispatch of hashchange in jsdom and the
      // asynchronous one in browsers
      setTimeout(() => {
        this.suppressHash = false;
      }, 0);
    }
  }

  private async refresh(): Promise<void> {
    this.renderDatasetSelect();
    this.renderTabs();
    this.renderConfigForm();
    await this.run(async () => {
      if (!this.state.datasetId) {
        this.elements.facetPanel.textContent = "";
        this.elements.main.innerHTML = "<p class='empty-note'>select a dataset</p>";
        this.elements.breadcrumb.textContent = "";
        this.elements.detail.textContent = "";
        return;
      }
      await this.loadFacets();
      switch (this.state.view) {
        case "stats":
          await this.showStats();
          break;
        case "metadata":
          await this.showMetadata();
          break;
        case "treemap":
          await this.showTreemap();
          break;
        default:
          await this.showChart();
      }
    });
  }

  private async loadFacets(): Promise<void> {
    if (!this.state.datasetId) return;
    this.catalog = await this.api.facets(this.state.datasetId);
    renderFacetPanel(
      this.elements.facetPanel,
      this.catalog,
      this.state.classIris,
      this.state.propertyIri,
      {
        onToggleClass: (iri) => void this.toggleClass(iri),
        onSelectProperty: (iri) => void this.selectProperty(iri),
      },
    );
  }

  // --- chart / hierarchy ----------------------------------------------------

  private async ensureTree(): Promise<HierarchyResponse | null> {
    if (!this.state.datasetId || !this.state.propertyIri) return null;
    const response = await this.api.hierarchy(
      this.state.datasetId,
      this.state.propertyIri,
      this.state.classIris,
      this.state.config,
    );
    this.treeToken = response.treeToken;
    this.axisKind = response.axisKind;
    this.nodeCache.set(response.root.nodeId, response.root);
    for (const child of response.children) this.nodeCache.set(child.nodeId, child);
    // the chart is a timeline exactly when the axis is temporal
    const chartView = response.axisKind === "temporal" ? "timeline" : "area";
    if (this.state.view === "area" || this.state.view === "timeline") {
      this.state = { ...this.state, view: chartView };
      this.writeHash();
      this.renderTabs();
    }
    return response;
  }

  private async childrenOf(nodeId: string): Promise<HierarchyNode[]> {
    if (!this.state.datasetId || !this.treeToken) return [];
    try {
      const response = await this.api.children(this.state.datasetId, this.treeToken, nodeId);
      for (const child of response.children) this.nodeCache.set(child.nodeId, child);
      return response.children;
    } catch (error) {
      if (error instanceof RequestFailed && error.info.status === 404) {
        // stale token (config changed elsewhere): rebuild transparently once
        const tree = await this.ensureTree();
        if (!tree) throw error;
        const retry = await this.api.children(this.state.datasetId, this.treeToken!, nodeId);
        for (const child of retry.children) this.nodeCache.set(child.nodeId, child);
        return retry.children;
      }
      throw error;
    }
  }

  private async showChart(): Promise<void> {
    if (!this.state.propertyIri) {
      this.elements.main.innerHTML =
        "<p class='empty-note'>select a numeric or date property</p>";
      this.elements.breadcrumb.textContent = "";
      this.elements.detail.textContent = "";
      return;
    }
    const tree = await this.ensureTree();
    if (!tree) return;

    // walk the ancestor chain so deep links land on a warm cache
    const path = navigationPath(this.state.focus);
    for (const ancestor of path) {
      if (!this.nodeCache.has(ancestor)) {
        // invalid deep-link node: reset navigation to the root
        this.state = { ...this.state, focus: "" };
        this.writeHash();
        break;
      }
      if (ancestor !== this.state.focus && !this.nodeCache.get(ancestor)!.isLeaf) {
        await this.childrenOf(ancestor);
      }
    }

    const focus = this.nodeCache.get(this.state.focus)!;
    this.renderBreadcrumb();
    renderGroupDetails(this.elements.detail, focus, this.axisKind === "temporal");

    if (focus.isLeaf) {
      await this.showPoints(focus);
      return;
    }
    const children =
      this.state.focus === "" ? tree.children : await this.childrenOf(this.state.focus);
    renderChart(this.elements.main, children, this.axisKind === "temporal", {
      onDrillDown: (node) => void this.drillDown(node.nodeId),
      onLeafOpen: (node) => void this.drillDown(node.nodeId),
    });
  }

  private async showPoints(leaf: HierarchyNode): Promise<void> {
    if (!this.state.datasetId || !this.treeToken) return;
    const page = await this.api.points(
      this.state.datasetId,
      this.treeToken,
      leaf.nodeId,
      POINT_PAGE,
      this.pointsOffset,
    );
    renderPointsTable(this.elements.main, page, this.axisKind === "temporal", {
      onPage: (offset) => {
        this.pointsOffset = offset;
        void this.run(() => this.showPoints(leaf));
      },
    });
  }

  private renderBreadcrumb(): void {
    const host = this.elements.breadcrumb;
    host.textContent = "";
    const path = navigationPath(this.state.focus);
    path.forEach((nodeId, index) => {
      const node = this.nodeCache.get(nodeId);
      const crumb = document.createElement("button");
      crumb.type = "button";
      crumb.className = "crumb";
      crumb.dataset.nodeId = nodeId;
      crumb.textContent =
        nodeId === ""
          ? "root"
          : node
            ? rangeLabel(node, this.axisKind === "temporal")
            : nodeId;
      crumb.disabled = index === path.length - 1;
      crumb.addEventListener("click", () => {
        void this.applyState({ ...this.state, focus: nodeId });
      });
      host.appendChild(crumb);
    });
    if (this.state.focus !== "") {
      const up = document.createElement("button");
      up.type = "button";
      up.className = "roll-up";
      up.textContent = "roll up";
      up.addEventListener("click", () => void this.rollUp());
      host.appendChild(up);
    }
  }

  // --- other views -----------------------------------------------------------

  private async showStats(): Promise<void> {
    if (!this.state.datasetId) return;
    const stats = await this.api.statistics(this.state.datasetId);
    this.elements.breadcrumb.textContent = "";
    this.elements.detail.textContent = "";
    renderStatsPanel(this.elements.main, stats);
  }

  private async showMetadata(): Promise<void> {
    if (!this.state.datasetId) return;
    const metadata = await this.api.metadata(this.state.datasetId);
    this.elements.breadcrumb.textContent = "";
    this.elements.detail.textContent = "";
    renderMetadataPanel(this.elements.main, metadata);
  }

  private async showTreemap(): Promise<void> {
    if (!this.state.datasetId) return;
    const root = await this.api.treemap(this.state.datasetId, this.state.treemapRoot);
    this.elements.breadcrumb.textContent = "";
    renderTreemap(this.elements.main, root, {
      onZoom: (classIri) => void this.zoomTreemap(classIri),
      onInspect: (node: TreemapNode) => renderClassDetail(this.elements.detail, node),
    });
    renderClassDetail(this.elements.detail, root);
  }

  // --- static chrome -----------------------------------------------------------

  private bindStaticHandlers(): void {
    this.elements.datasetSelect.addEventListener("change", () => {
      const value = this.elements.datasetSelect.value;
      if (value) void this.selectDataset(value);
    });
    this.elements.configForm.addEventListener("submit", (event) => {
      event.preventDefault();
      const form = this.elements.configForm;
      const config: HierarchyConfigState = {
        strategy: (form.elements.namedItem("strategy") as HTMLSelectElement)
          .value as HierarchyConfigState["strategy"],
        levels: Number((form.elements.namedItem("levels") as HTMLInputElement).value),
        fanout: Number((form.elements.namedItem("fanout") as HTMLInputElement).value),
      };
      const errors = validateConfig(config);
      this.renderConfigErrors(errors);
      if (Object.keys(errors).length) return; // invalid: no request leaves the client
      void this.reconfigure(config);
    });
  }

  private renderDatasetSelect(): void {
    const select = this.elements.datasetSelect;
    select.textContent = "";
    const placeholder = document.createElement("option");
    placeholder.value = "";
    placeholder.textContent = "— dataset —";
    select.appendChild(placeholder);
    for (const dataset of this.datasets) {
      const option = document.createElement("option");
      option.value = dataset.id;
      option.textContent = `${dataset.name} (${dataset.tripleCount})`;
      select.appendChild(option);
    }
    select.value = this.state.datasetId ?? "";
  }

  private renderTabs(): void {
    const host = this.elements.tabs;
    host.textContent = "";
    const chartLabel = this.axisKind === "temporal" ? "timeline" : "area chart";
    const tabs: [ExplorerState["view"], string][] = [
      [this.axisKind === "temporal" ? "timeline" : "area", chartLabel],
      ["treemap", "treemap"],
      ["stats", "statistics"],
      ["metadata", "metadata"],
    ];
    for (const [view, label] of tabs) {
      const tab = document.createElement("button");
      tab.type = "button";
      tab.dataset.view = view;
      tab.className =
        "tab" +
        (this.state.view === view ||
        (view !== "treemap" && view !== "stats" && view !== "metadata" &&
          (this.state.view === "area" || this.state.view === "timeline"))
          ? " active"
          : "");
      tab.textContent = label;
      tab.addEventListener("click", () => void this.showView(view));
      host.appendChild(tab);
    }
  }

  private renderConfigForm(): void {
    const form = this.elements.configForm;
    (form.elements.namedItem("strategy") as HTMLSelectElement).value = this.state.config.strategy;
    (form.elements.namedItem("levels") as HTMLInputElement).value = String(this.state.config.levels);
    (form.elements.namedItem("fanout") as HTMLInputElement).value = String(this.state.config.fanout);
    this.renderConfigErrors({});
  }

  private renderConfigErrors(errors: { levels?: string; fanout?: string; strategy?: string }): void {
    for (const field of ["strategy", "levels", "fanout"] as const) {
      const slot = this.elements.configForm.querySelector(`[data-error-for="${field}"]`);
      if (slot) slot.textContent = errors[field] ?? "";
    }
  }

  private showError(error: unknown): void {
    if (error instanceof ConfigValidationError) {
      this.renderConfigErrors(error.errors);
      return;
    }
    const message =
      error instanceof RequestFailed
        ? `${error.info.code}: ${error.info.message}`
        : String(error);
    renderRetry(this.elements.error, message, () => {
      this.clearError();
      void this.refresh();
    });
  }

  private clearError(): void {
    this.elements.error.textContent = "";
  }
}

function buildSkeleton(container: HTMLElement): Elements {
  container.innerHTML = `
    <header class="topbar">
      <h1>dataset explorer</h1>
      <select class="dataset-select"></select>
      <nav class="tabs"></nav>
    </header>
    <div class="layout">
      <aside class="facet-panel"></aside>
      <section class="content">
        <form class="config-form">
          <label>strategy
            <select name="strategy">
              <option value="equal-frequency">equal-frequency</option>
              <option value="equal-width">equal-width</option>
            </select>
          </label><span class="field-error" data-error-for="strategy"></span>
          <label>levels <input name="levels" type="number" value="3"></label>
          <span class="field-error" data-error-for="levels"></span>
          <label>fanout <input name="fanout" type="number" value="10"></label>
          <span class="field-error" data-error-for="fanout"></span>
          <button type="submit">apply</button>
        </form>
        <nav class="breadcrumb"></nav>
        <div class="error-area"></div>
        <main class="view"></main>
      </section>
      <aside class="detail-panel"></aside>
    </div>`;
  return {
    datasetSelect: container.querySelector(".dataset-select") as HTMLSelectElement,
    facetPanel: container.querySelector(".facet-panel") as HTMLElement,
    breadcrumb: container.querySelector(".breadcrumb") as HTMLElement,
    main: container.querySelector(".view") as HTMLElement,
    detail: container.querySelector(".detail-panel") as HTMLElement,
    tabs: container.querySelector(".tabs") as HTMLElement,
    configForm: container.querySelector(".config-form") as HTMLFormElement,
    error: container.querySelector(".error-area") as HTMLElement,
  };
}
