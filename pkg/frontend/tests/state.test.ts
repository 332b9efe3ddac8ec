import { describe, expect, it } from "vitest";

import {
  ConfigValidationError,
  drillDown,
  initialState,
  navigationPath,
  parentOf,
  reconfigure,
  rollUp,
  selectProperty,
  stateFromHash,
  stateToHash,
  toggleClass,
  validateConfig,
} from "../src/state.js";

function sampleState() {
  let state = initialState();
  state = { ...state, datasetId: "abc123", propertyIri: "http://ex/population" };
  return state;
}

describe("navigation", () => {
  it("derives the root-to-focus chain from the node id", () => {
    expect(navigationPath("")).toEqual([""]);
    expect(navigationPath("2")).toEqual(["", "2"]);
    expect(navigationPath("2.0.4")).toEqual(["", "2", "2.0", "2.0.4"]);
  });

  it("parentOf strips one segment", () => {
    expect(parentOf("2.0.4")).toBe("2.0");
    expect(parentOf("2")).toBe("");
    expect(parentOf("")).toBe("");
  });

  it("drillDown then rollUp restores the exact prior state", () => {
    const before = sampleState();
    const down = drillDown(before, "3");
    expect(down.focus).toBe("3");
    const restored = rollUp(down);
    expect(restored).toEqual(before);
    const deeper = drillDown(down, "3.1");
    expect(rollUp(rollUp(deeper))).toEqual(before);
  });

  it("drillDown only accepts children of the focus", () => {
    const state = sampleState();
    expect(() => drillDown(state, "2.0")).toThrow();
    expect(() => drillDown(drillDown(state, "2"), "4.1")).toThrow();
  });

  it("rollUp at the root is a no-op", () => {
    const state = sampleState();
    expect(rollUp(state)).toEqual(state);
  });
});

describe("facet selection", () => {
  it("selecting a property resets navigation to the root", () => {
    const deep = drillDown(sampleState(), "1");
    const switched = selectProperty(deep, "http://ex/founded");
    expect(switched.focus).toBe("");
    expect(switched.propertyIri).toBe("http://ex/founded");
  });

  it("class toggling keeps a sorted set and resets navigation", () => {
    let state = sampleState();
    state = toggleClass(state, "http://ex/B");
    state = toggleClass(state, "http://ex/A");
    expect(state.classIris).toEqual(["http://ex/A", "http://ex/B"]);
    state = toggleClass(state, "http://ex/B");
    expect(state.classIris).toEqual(["http://ex/A"]);
    expect(state.focus).toBe("");
  });
});

describe("hierarchy reconfiguration", () => {
  it("resets navigation to the root", () => {
    const deep = drillDown(drillDown(sampleState(), "2"), "2.1");
    const reconfigured = reconfigure(deep, {
      strategy: "equal-width",
      levels: 2,
      fanout: 4,
    });
    expect(reconfigured.focus).toBe("");
    expect(reconfigured.config).toEqual({ strategy: "equal-width", levels: 2, fanout: 4 });
  });

  it("rejects out-of-range values client-side with field errors", () => {
    expect(validateConfig({ strategy: "equal-width", levels: 0, fanout: 4 }).levels).toBeTruthy();
    expect(validateConfig({ strategy: "equal-width", levels: 13, fanout: 4 }).levels).toBeTruthy();
    expect(validateConfig({ strategy: "equal-width", levels: 2, fanout: 0 }).fanout).toBeTruthy();
    expect(validateConfig({ strategy: "equal-width", levels: 2, fanout: 1001 }).fanout).toBeTruthy();
    expect(validateConfig({ strategy: "equal-width", levels: 2, fanout: 4 })).toEqual({});
    try {
      reconfigure(sampleState(), { strategy: "equal-width", levels: 2, fanout: 0 });
      expect.unreachable("fanout 0 must not pass validation");
    } catch (error) {
      expect(error).toBeInstanceOf(ConfigValidationError);
      expect((error as ConfigValidationError).errors.fanout).toContain("fanout");
    }
  });
});

describe("deep links", () => {
  it("hash round-trips every state field", () => {
    let state = sampleState();
    state = toggleClass(state, "http://ex/EU");
    state = reconfigure(state, { strategy: "equal-width", levels: 2, fanout: 4 });
    state = drillDown(state, "1");
    state = drillDown(state, "1.0");
    state = { ...state, view: "timeline" as const };
    const hash = stateToHash(state);
    expect(stateFromHash(hash)).toEqual(state);
  });

  it("defaults are omitted from the hash", () => {
    const state = sampleState();
    const hash = stateToHash(state);
    expect(hash).toContain("dataset=abc123");
    expect(hash).not.toContain("levels=");
    expect(hash).not.toContain("strategy=");
  });

  it("an empty hash yields the initial state", () => {
    expect(stateFromHash("")).toEqual(initialState());
    expect(stateFromHash("#")).toEqual(initialState());
  });

  it("treemap state round-trips", () => {
    let state = sampleState();
    state = { ...state, view: "treemap" as const, treemapRoot: "http://ex/Animal" };
    expect(stateFromHash(stateToHash(state))).toEqual(state);
  });
});
