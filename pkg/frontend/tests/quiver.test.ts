import { describe, expect, it } from "vitest";
import { QuiverData } from "../src/api";
import { arrowLabel, buildScene, placeVertices, quiverArrows, quiverSvg } from "../src/quiver";

// b2 preset: two mutable vertices, entries weighted 1 against 2.
const B2: QuiverData = {
  n: 2,
  m: 2,
  d: [2, 1],
  entries: [[0, 1], [-2, 0]],
  labels: ["z1", "z2"],
  frozen: [false, false],
};

// Two mutable vertices and one frozen row pointing in with weight 2.
const WITH_FROZEN: QuiverData = {
  n: 2,
  m: 3,
  d: [1, 1, 1],
  entries: [[0, 1], [-1, 0], [-2, 0]],
  labels: ["a", "b", "boxed"],
  frozen: [false, false, true],
};

describe("quiverArrows", () => {
  it("emits one arrow per mutable pair with both multiplicities", () => {
    expect(quiverArrows(B2)).toEqual([{ from: 1, to: 2, forward: 1, backward: 2 }]);
  });

  it("orients frozen-row entries by their sign", () => {
    const arrows = quiverArrows(WITH_FROZEN);
    expect(arrows).toContainEqual({ from: 1, to: 3, forward: 2, backward: 0 });
    const incoming: QuiverData = { ...WITH_FROZEN, entries: [[0, 1], [-1, 0], [3, 0]] };
    expect(quiverArrows(incoming)).toContainEqual({ from: 3, to: 1, forward: 3, backward: 0 });
  });

  it("skips zero entries entirely", () => {
    const empty: QuiverData = { ...B2, entries: [[0, 0], [0, 0]] };
    expect(quiverArrows(empty)).toEqual([]);
  });
});

describe("arrowLabel", () => {
  it("hides multiplicity one and shows asymmetric weights as a pair", () => {
    expect(arrowLabel({ from: 1, to: 2, forward: 1, backward: 1 })).toBe("");
    expect(arrowLabel({ from: 1, to: 2, forward: 1, backward: 0 })).toBe("");
    expect(arrowLabel({ from: 1, to: 2, forward: 2, backward: 2 })).toBe("2");
    expect(arrowLabel({ from: 1, to: 2, forward: 2, backward: 0 })).toBe("2");
    expect(arrowLabel({ from: 1, to: 2, forward: 1, backward: 2 })).toBe("1,2");
  });
});

describe("placeVertices", () => {
  it("scales layout hints uniformly into the viewport", () => {
    const layout: Record<string, [number, number]> = { a: [0, 0], b: [2, 0], boxed: [1, 1] };
    const placed = placeVertices(WITH_FROZEN, layout, 400, 300, 50);
    const [a, b, boxed] = placed;
    expect(a.y).toBeCloseTo(b.y);
    expect(b.x - a.x).toBeCloseTo(2 * (boxed.x - a.x));
    expect(boxed.y).toBeGreaterThan(a.y);
    for (const vertex of placed) {
      expect(vertex.x).toBeGreaterThanOrEqual(50);
      expect(vertex.x).toBeLessThanOrEqual(350);
      expect(vertex.y).toBeGreaterThanOrEqual(50);
      expect(vertex.y).toBeLessThanOrEqual(250);
    }
  });

  it("keeps a one-dimensional layout centered", () => {
    const layout: Record<string, [number, number]> = { z1: [0, 0], z2: [1, 0] };
    const [v1, v2] = placeVertices(B2, layout, 400, 300, 50);
    expect(v1.y).toBeCloseTo(150);
    expect(v2.y).toBeCloseTo(150);
    expect(v2.x).toBeGreaterThan(v1.x);
  });

  it("falls back to a circle when a label has no hint", () => {
    const placed = placeVertices(WITH_FROZEN, { a: [0, 0] }, 400, 400, 50);
    const distinct = new Set(placed.map((vertex) => `${vertex.x.toFixed(1)},${vertex.y.toFixed(1)}`));
    expect(distinct.size).toBe(3);
    for (const vertex of placed) {
      const fromCenter = Math.hypot(vertex.x - 200, vertex.y - 200);
      expect(fromCenter).toBeCloseTo(150, 5);
    }
  });
});

describe("quiverSvg", () => {
  it("boxes frozen vertices and circles mutable ones", () => {
    const svg = quiverSvg(buildScene(WITH_FROZEN, {}));
    expect(svg).toContain('class="vertex frozen"');
    expect(svg).toContain("<rect");
    expect((svg.match(/<circle/g) ?? []).length).toBe(2);
    expect(svg).toContain(">boxed</text>");
  });

  it("tags every vertex with its 1-based index for click handling", () => {
    const svg = quiverSvg(buildScene(WITH_FROZEN, {}));
    expect(svg).toContain('data-vertex="1"');
    expect(svg).toContain('data-vertex="2"');
    expect(svg).toContain('data-vertex="3"');
  });

  it("draws arrows with their matrix multiplicities", () => {
    const svg = quiverSvg(buildScene(B2, {}));
    expect(svg).toContain('data-mult="1"');
    expect(svg).toContain('class="arrow-label"');
    expect(svg).toContain(">1,2</text>");
    expect(svg).toContain('marker-end="url(#arrowhead)"');
  });

  it("escapes markup in labels", () => {
    const spiky: QuiverData = { ...B2, labels: ["z<1>", "z&2"] };
    const svg = quiverSvg(buildScene(spiky, {}));
    expect(svg).toContain("z&lt;1&gt;");
    expect(svg).toContain("z&amp;2");
    expect(svg).not.toContain("<1>");
  });
});
