/** The UI never recomputes statistics: every number in a rendered tooltip
 * must diff-equal a field of the mocked API payload. */

import { describe, expect, it } from "vitest";

import type { HierarchyNode } from "../src/api.js";
import { renderChart, renderGroupDetails } from "../src/chart.js";
import { tooltipLines } from "../src/format.js";

const numericNode: HierarchyNode = {
  nodeId: "2",
  depth: 1,
  lo: 1.5,
  hi: 9.25,
  closure: "half-open",
  isLeaf: false,
  childCount: 3,
  prunedChildCount: 1,
  stats: {
    count: 17,
    min: 1.5,
    max: 9.0,
    sum: 88.125,
    sumSquares: 612.840625,
    mean: 5.183823529411765,
    variance: 9.181660899653979,
    samples: [
      { subject: "http://ex/a", value: 1.5 },
      { subject: "http://ex/b", value: 2.25 },
    ],
  },
};

const temporalNode: HierarchyNode = {
  nodeId: "0",
  depth: 1,
  lo: 1072915200000,
  hi: 1104537600000,
  loIso: "2004-01-01T00:00:00Z",
  hiIso: "2005-01-01T00:00:00Z",
  closure: "closed",
  isLeaf: true,
  childCount: 0,
  prunedChildCount: 0,
  stats: {
    count: 2,
    min: 1072915200000,
    max: 1104537600000,
    minIso: "2004-01-01T00:00:00Z",
    maxIso: "2005-01-01T00:00:00Z",
    sum: 2177452800000,
    sumSquares: 2.370646573056e24,
    mean: 1088726400000,
    variance: 2.49917675811840963e20,
    samples: [
      { subject: "http://ex/d1", value: 1072915200000, valueIso: "2004-01-01T00:00:00Z" },
    ],
  },
};

describe("tooltip contents", () => {
  it("every numeric tooltip value is a verbatim payload field", () => {
    const lines = tooltipLines(numericNode, false);
    const byKey = new Map(lines.map((l) => [l.split(" ")[0], l.slice(l.indexOf(" ") + 1)]));
    expect(byKey.get("count")).toBe(String(numericNode.stats.count));
    expect(byKey.get("min")).toBe(String(numericNode.stats.min));
    expect(byKey.get("max")).toBe(String(numericNode.stats.max));
    expect(byKey.get("mean")).toBe(String(numericNode.stats.mean));
    expect(byKey.get("variance")).toBe(String(numericNode.stats.variance));
    const sampleLines = lines.filter((l) => l.startsWith("sample "));
    expect(sampleLines).toEqual(
      numericNode.stats.samples.map((s) => `sample ${s.subject} = ${s.value}`),
    );
  });

  it("temporal tooltips use the payload ISO strings verbatim", () => {
    const lines = tooltipLines(temporalNode, true);
    expect(lines).toContain(`min ${temporalNode.stats.minIso}`);
    expect(lines).toContain(`max ${temporalNode.stats.maxIso}`);
    expect(lines).toContain(`mean ${temporalNode.stats.mean}`);
    expect(lines).toContain(
      `sample ${temporalNode.stats.samples[0].subject} = ${temporalNode.stats.samples[0].valueIso}`,
    );
  });

  it("rendered SVG titles diff-equal the computed tooltip lines", () => {
    const host = document.createElement("div");
    renderChart(host, [numericNode, temporalNode], false, {
      onDrillDown: () => undefined,
      onLeafOpen: () => undefined,
    });
    const titles = [...host.querySelectorAll("title")].map((t) => t.textContent);
    expect(titles).toEqual([
      tooltipLines(numericNode, false).join("\n"),
      tooltipLines(temporalNode, false).join("\n"),
    ]);
    const bars = [...host.querySelectorAll(".group-bar")];
    expect(bars.map((b) => b.getAttribute("data-count"))).toEqual(["17", "2"]);
  });

  it("the fixed details panel shows the same values as the tooltip", () => {
    const host = document.createElement("div");
    renderGroupDetails(host, numericNode, false);
    const values = [...host.querySelectorAll("dd")].map((d) => d.textContent);
    expect(values).toContain(String(numericNode.stats.mean));
    expect(values).toContain(String(numericNode.stats.variance));
  });

  it("bars drill down, leaves open raw values", () => {
    const host = document.createElement("div");
    const events: string[] = [];
    renderChart(host, [numericNode, temporalNode], false, {
      onDrillDown: (n) => events.push("down:" + n.nodeId),
      onLeafOpen: (n) => events.push("leaf:" + n.nodeId),
    });
    const bars = [...host.querySelectorAll<SVGGElement>(".group-bar")];
    bars[0].dispatchEvent(new MouseEvent("click", { bubbles: true }));
    bars[1].dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(events).toEqual(["down:2", "leaf:0"]);
  });

  it("an empty level renders a note instead of an svg", () => {
    const host = document.createElement("div");
    renderChart(host, [], false, { onDrillDown: () => {}, onLeafOpen: () => {} });
    expect(host.querySelector("svg")).toBeNull();
    expect(host.textContent).toContain("no groups");
  });
});
