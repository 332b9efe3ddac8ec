/** Typed client for the dataset API. Every displayed number comes from
 * these payloads verbatim; the UI never recomputes statistics. */

export interface DatasetListing {
  id: string;
  name: string;
  tripleCount: number;
  loadedAt: string;
}

export interface PropertyFacet {
  iri: string;
  literalKind: "numeric" | "temporal";
  tripleCount: number;
  distinctSubjectCount: number;
  min: number;
  max: number;
  minIso?: string;
  maxIso?: string;
  skippedLiterals: number;
}

export interface ClassFacet {
  iri: string;
  transitiveInstanceCount: number;
  children: ClassFacet[];
}

export interface FacetCatalog {
  classFacets: ClassFacet[];
  propertyFacets: PropertyFacet[];
}

export interface Sample {
  subject: string;
  value: number;
  valueIso?: string;
}

export interface GroupStats {
  count: number;
  min: number;
  max: number;
  sum: number;
  sumSquares: number;
  mean: number;
  variance: number;
  minIso?: string;
  maxIso?: string;
  samples: Sample[];
}

export interface HierarchyNode {
  nodeId: string;
  depth: number;
  lo: number;
  hi: number;
  loIso?: string;
  hiIso?: string;
  closure: "half-open" | "closed";
  isLeaf: boolean;
  childCount: number;
  prunedChildCount: number;
  stats: GroupStats;
}

export interface HierarchyResponse {
  treeToken: string;
  axisKind: "numeric" | "temporal";
  config: { strategy: string; levels: number; fanout: number; sampleSize: number };
  pointCount: number;
  skippedLiterals: number;
  root: HierarchyNode;
  children: HierarchyNode[];
}

export interface ChildrenResponse {
  nodeId: string;
  children: HierarchyNode[];
}

export interface PointRow {
  subject: string;
  value: number;
  valueIso?: string;
  source: string | null;
}

export interface PointsResponse {
  nodeId: string;
  total: number;
  offset: number;
  limit: number;
  points: PointRow[];
}

export interface TreemapNode {
  classIri: string | null;
  label: string;
  directInstanceCount: number;
  transitiveInstanceCount: number;
  subclassCount: number;
  datatypePropertyCount: number;
  objectPropertyCount: number;
  propertyDetails:
    | {
        iri: string;
        cardinality: number;
        valueMin: number | null;
        valueMax: number | null;
        valueMinIso?: string;
        valueMaxIso?: string;
      }[]
    | null;
  propertyDetailsDeferred: boolean;
  truncated: boolean;
  children: TreemapNode[];
}

export interface ApiError {
  status: number;
  code: string;
  message: string;
  detail?: unknown;
}

export class RequestFailed extends Error {
  constructor(readonly info: ApiError) {
    super(`${info.code}: ${info.message}`);
  }
}

/** GETs with per-key cancellation: a new request under the same key aborts
 * the previous one, so stale responses can never render out of order. */
export class ApiClient {
  private inflight = new Map<string, AbortController>();

  constructor(readonly base: string) {}

  private async request<T>(path: string, cancelKey?: string): Promise<T> {
    let signal: AbortSignal | undefined;
    if (cancelKey) {
      this.inflight.get(cancelKey)?.abort();
      const controller = new AbortController();
      this.inflight.set(cancelKey, controller);
      signal = controller.signal;
    }
    const response = await fetch(this.base + path, { signal });
    if (!response.ok) {
      let body: { code?: string; message?: string; detail?: unknown } = {};
      try {
        body = await response.json();
      } catch {
        /* non-JSON error body */
      }
      throw new RequestFailed({
        status: response.status,
        code: body.code ?? `http_${response.status}`,
        message: body.message ?? response.statusText,
        detail: body.detail,
      });
    }
    return (await response.json()) as T;
  }

  datasets(): Promise<DatasetListing[]> {
    return this.request("/datasets");
  }

  statistics(datasetId: string): Promise<unknown> {
    return this.request(`/datasets/${datasetId}/statistics`, "statistics");
  }

  metadata(datasetId: string): Promise<{ found: boolean; entries: unknown[] }> {
    return this.request(`/datasets/${datasetId}/metadata`, "metadata");
  }

  facets(datasetId: string): Promise<FacetCatalog> {
    return this.request(`/datasets/${datasetId}/facets`, "facets");
  }

  treemap(datasetId: string, root: string | null, depth?: number): Promise<TreemapNode> {
    const params = new URLSearchParams();
    if (root) params.set("root", root);
    if (depth !== undefined) params.set("depth", String(depth));
    const query = params.toString();
    return this.request(
      `/datasets/${datasetId}/treemap${query ? "?" + query : ""}`,
      "treemap",
    );
  }

  hierarchy(
    datasetId: string,
    propertyIri: string,
    classIris: string[],
    config: { strategy: string; levels: number; fanout: number },
  ): Promise<HierarchyResponse> {
    const params = new URLSearchParams({
      property: propertyIri,
      strategy: config.strategy,
      levels: String(config.levels),
      fanout: String(config.fanout),
    });
    if (classIris.length) params.set("classes", classIris.join(","));
    return this.request(`/datasets/${datasetId}/hierarchy?${params}`, "hierarchy");
  }

  children(datasetId: string, token: string, nodeId: string): Promise<ChildrenResponse> {
    return this.request(
      `/datasets/${datasetId}/hierarchy/${token}/nodes/${nodeSegment(nodeId)}/children`,
      "children",
    );
  }

  points(
    datasetId: string,
    token: string,
    nodeId: string,
    limit: number,
    offset: number,
  ): Promise<PointsResponse> {
    return this.request(
      `/datasets/${datasetId}/hierarchy/${token}/nodes/${nodeSegment(nodeId)}/points` +
        `?limit=${limit}&offset=${offset}`,
      "points",
    );
  }
}

/** The root's node id is the empty string; the API uses "root" in URLs. */
export function nodeSegment(nodeId: string): string {
  return nodeId === "" ? "root" : nodeId;
}
