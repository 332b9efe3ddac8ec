/** Explorer state and its pure transitions.
 *
 * Everything here is synchronous and serializable: the whole view is
 * reconstructable from the URL hash (deep links), and navigation is a
 * stack of node ids where each entry is the child of the previous one.
 */

export type ViewMode = "area" | "timeline" | "treemap" | "stats" | "metadata";

export interface HierarchyConfigState {
  strategy: "equal-width" | "equal-frequency";
  levels: number;
  fanout: number;
}

export interface ExplorerState {
  datasetId: string | null;
  propertyIri: string | null;
  classIris: string[];
  config: HierarchyConfigState;
  /** Focused node id; "" is the root. Ancestors are derivable prefixes. */
  focus: string;
  view: ViewMode;
  treemapRoot: string | null;
}

export const SERVER_CAPS = { maxLevels: 12, maxFanout: 1000 };

export const DEFAULT_CONFIG: HierarchyConfigState = {
  strategy: "equal-frequency",
  levels: 3,
  fanout: 10,
};

export function initialState(): ExplorerState {
  return {
    datasetId: null,
    propertyIri: null,
    classIris: [],
    config: { ...DEFAULT_CONFIG },
    focus: "",
    view: "area",
    treemapRoot: null,
  };
}

/** Root-to-focus chain, e.g. "2.0" -> ["", "2", "2.0"]. */
export function navigationPath(focus: string): string[] {
  if (focus === "") return [""];
  const path = [""];
  const segments = focus.split(".");
  for (let i = 0; i < segments.length; i++) {
    path.push(segments.slice(0, i + 1).join("."));
  }
  return path;
}

export function parentOf(nodeId: string): string {
  const idx = nodeId.lastIndexOf(".");
  return idx < 0 ? "" : nodeId.slice(0, idx);
}

export function isChildOf(child: string, parent: string): boolean {
  return parentOf(child) === parent && child !== parent;
}

// --- transitions (all return fresh state objects) -------------------------

export function selectDataset(state: ExplorerState, datasetId: string): ExplorerState {
  return {
    ...initialState(),
    datasetId,
    view: state.view === "metadata" || state.view === "stats" ? state.view : "stats",
  };
}

export function selectProperty(state: ExplorerState, propertyIri: string): ExplorerState {
  // new facet selection: navigation resets to root
  return { ...state, propertyIri, focus: "", view: "area" };
}

export function toggleClass(state: ExplorerState, classIri: string): ExplorerState {
  const classIris = state.classIris.includes(classIri)
    ? state.classIris.filter((c) => c !== classIri)
    : [...state.classIris, classIri].sort();
  return { ...state, classIris, focus: "" };
}

export function drillDown(state: ExplorerState, nodeId: string): ExplorerState {
  if (!isChildOf(nodeId, state.focus)) {
    throw new Error(`${nodeId} is not a child of ${state.focus || "the root"}`);
  }
  return { ...state, focus: nodeId };
}

export function rollUp(state: ExplorerState): ExplorerState {
  if (state.focus === "") return state;
  return { ...state, focus: parentOf(state.focus) };
}

export function jumpTo(state: ExplorerState, nodeId: string): ExplorerState {
  return { ...state, focus: nodeId };
}

export interface ConfigErrors {
  levels?: string;
  fanout?: string;
  strategy?: string;
}

/** Mirror of the server guard rails; invalid values never leave the client. */
export function validateConfig(config: HierarchyConfigState): ConfigErrors {
  const errors: ConfigErrors = {};
  if (!Number.isInteger(config.levels) || config.levels < 1 || config.levels > SERVER_CAPS.maxLevels) {
    errors.levels = `levels must be an integer in 1..${SERVER_CAPS.maxLevels}`;
  }
  if (!Number.isInteger(config.fanout) || config.fanout < 2 || config.fanout > SERVER_CAPS.maxFanout) {
    errors.fanout = `fanout must be an integer in 2..${SERVER_CAPS.maxFanout}`;
  }
  if (config.strategy !== "equal-width" && config.strategy !== "equal-frequency") {
    errors.strategy = "unknown strategy";
  }
  return errors;
}

export function reconfigure(
  state: ExplorerState,
  config: HierarchyConfigState,
): ExplorerState {
  const errors = validateConfig(config);
  if (Object.keys(errors).length) {
    throw new ConfigValidationError(errors);
  }
  // hierarchy re-specified: navigation resets to root
  return { ...state, config: { ...config }, focus: "" };
}

export class ConfigValidationError extends Error {
  constructor(readonly errors: ConfigErrors) {
    super("invalid hierarchy configuration");
  }
}

export function setView(state: ExplorerState, view: ViewMode): ExplorerState {
  return { ...state, view };
}

export function setTreemapRoot(state: ExplorerState, root: string | null): ExplorerState {
  return { ...state, treemapRoot: root, view: "treemap" };
}

// --- URL (de)serialization --------------------------------------------------

export function stateToHash(state: ExplorerState): string {
  const params = new URLSearchParams();
  if (state.datasetId) params.set("dataset", state.datasetId);
  if (state.propertyIri) params.set("property", state.propertyIri);
  if (state.classIris.length) params.set("classes", state.classIris.join(","));
  if (state.config.strategy !== DEFAULT_CONFIG.strategy) params.set("strategy", state.config.strategy);
  if (state.config.levels !== DEFAULT_CONFIG.levels) params.set("levels", String(state.config.levels));
  if (state.config.fanout !== DEFAULT_CONFIG.fanout) params.set("fanout", String(state.config.fanout));
  if (state.focus !== "") params.set("node", state.focus);
  if (state.view !== "area") params.set("view", state.view);
  if (state.treemapRoot) params.set("troot", state.treemapRoot);
  const encoded = params.toString();
  return encoded ? "#" + encoded : "";
}

export function stateFromHash(hash: string): ExplorerState {
  const state = initialState();
  const raw = hash.startsWith("#") ? hash.slice(1) : hash;
  if (!raw) return state;
  const params = new URLSearchParams(raw);
  state.datasetId = params.get("dataset");
  state.propertyIri = params.get("property");
  const classes = params.get("classes");
  state.classIris = classes ? classes.split(",").filter(Boolean).sort() : [];
  const strategy = params.get("strategy");
  if (strategy === "equal-width" || strategy === "equal-frequency") {
    state.config.strategy = strategy;
  }
  const levels = Number(params.get("levels") ?? DEFAULT_CONFIG.levels);
  const fanout = Number(params.get("fanout") ?? DEFAULT_CONFIG.fanout);
  if (!validateConfig({ ...state.config, levels, fanout }).levels) state.config.levels = levels;
  if (!validateConfig({ ...state.config, levels: state.config.levels, fanout }).fanout) {
    state.config.fanout = fanout;
  }
  state.focus = params.get("node") ?? "";
  const view = params.get("view");
  if (view === "timeline" || view === "treemap" || view === "stats" || view === "metadata") {
    state.view = view;
  }
  state.treemapRoot = params.get("troot");
  return state;
}
