import { describe, expect, it } from "vitest";

import { SpatialGrid } from "../src/grid.js";
import { labelsNearPointer } from "../src/hover.js";
import { initialState } from "../src/state.js";
import { makePlane, makeRng } from "./helpers.js";

function fixture(nPoints: number, seed: number, width = 800, height = 500) {
  const rng = makeRng(seed);
  const xs = new Float64Array(nPoints);
  const ys = new Float64Array(nPoints);
  const terms: string[] = [];
  for (let i = 0; i < nPoints; i++) {
    xs[i] = rng() * width;
    ys[i] = rng() * height;
    terms.push(`w${String(i).padStart(5, "0")}`);
  }
  const grid = new SpatialGrid(24);
  grid.rebuild(xs, ys);
  return { xs, ys, terms, grid };
}

/** Exhaustive distance scan: the independent oracle for hover queries. */
function bruteWithin(xs: Float64Array, ys: Float64Array, x: number, y: number, r: number) {
  const hits: Array<{ id: number; dist: number }> = [];
  for (let i = 0; i < xs.length; i++) {
    const d = Math.hypot(xs[i] - x, ys[i] - y);
    if (d <= r) {
      hits.push({ id: i, dist: d });
    }
  }
  return hits;
}

describe("acceptance criterion 9: hover soundness", () => {
  it("returns exactly the points within radius on a 1k fixture, 100 pointers", () => {
    const { xs, ys, terms, grid } = fixture(1000, 7);
    const state = { ...initialState(makePlane(5)), maxLabels: 10_000 };
    const rng = makeRng(99);
    for (let q = 0; q < 100; q++) {
      const x = rng() * 800;
      const y = rng() * 500;
      const hoverState = { ...state, hover: { x, y } };
      const got = labelsNearPointer(grid, terms, xs, ys, hoverState)
        .map((l) => l.pointId)
        .sort((a, b) => a - b);
      const want = bruteWithin(xs, ys, x, y, state.labelRadius)
        .map((h) => h.id)
        .sort((a, b) => a - b);
      expect(got).toEqual(want);
    }
    console.log("[ACCEPTANCE] criterion 9 (hover soundness): PASS");
  });

  it("orders labels nearest first with lexicographic ties", () => {
    const xs = Float64Array.from([100, 110, 100, 100]);
    const ys = Float64Array.from([100, 100, 110, 90]);
    const terms = ["delta", "alpha", "zeta", "beta"];
    const grid = new SpatialGrid(24);
    grid.rebuild(xs, ys);
    const state = { ...initialState(makePlane(5)), hover: { x: 100, y: 100 } };
    const labels = labelsNearPointer(grid, terms, xs, ys, state);
    expect(labels[0].term).toBe("delta");
    // the remaining three are equidistant (10 px): lexicographic order
    expect(labels.slice(1).map((l) => l.term)).toEqual(["alpha", "beta", "zeta"]);
  });

  it("caps the list without hiding anything nearer than a shown label", () => {
    const { xs, ys, terms, grid } = fixture(1000, 3);
    const state = {
      ...initialState(makePlane(5)),
      hover: { x: 400, y: 250 },
      labelRadius: 300,
      maxLabels: 12,
    };
    const labels = labelsNearPointer(grid, terms, xs, ys, state);
    expect(labels.length).toBe(12);
    const shownMax = Math.max(...labels.map((l) => l.dist));
    const all = bruteWithin(xs, ys, 400, 250, 300);
    const hiddenCloser = all.filter(
      (h) => h.dist < shownMax && !labels.some((l) => l.pointId === h.id));
    expect(hiddenCloser).toEqual([]);
  });

  it("returns nothing when the pointer is far from every point", () => {
    const { xs, ys, terms, grid } = fixture(50, 5, 100, 100);
    const state = { ...initialState(makePlane(5)), hover: { x: 5000, y: 5000 } };
    expect(labelsNearPointer(grid, terms, xs, ys, state)).toEqual([]);
  });

  it("labels the exact point first when the pointer sits on it", () => {
    const { xs, ys, terms, grid } = fixture(200, 11);
    const state = { ...initialState(makePlane(5)), hover: { x: xs[42], y: ys[42] } };
    const labels = labelsNearPointer(grid, terms, xs, ys, state);
    expect(labels[0].term).toBe(terms[42]);
    expect(labels[0].dist).toBe(0);
  });

  it("returns nothing without a hover position", () => {
    const { xs, ys, terms, grid } = fixture(50, 5);
    const state = initialState(makePlane(5));
    expect(labelsNearPointer(grid, terms, xs, ys, state)).toEqual([]);
  });
});

describe("acceptance criterion 10: hover latency at full corpus scale", () => {
  it("answers hover queries on ~44k points in under 50 ms", () => {
    const { xs, ys, terms, grid } = fixture(44_000, 13, 1600, 900);
    const state = { ...initialState(makePlane(5)), maxLabels: 12 };
    const rng = makeRng(21);

    // warm up allocation paths
    for (let q = 0; q < 10; q++) {
      labelsNearPointer(grid, terms, xs, ys,
        { ...state, hover: { x: rng() * 1600, y: rng() * 900 } });
    }

    let worst = 0;
    const queries = 200;
    for (let q = 0; q < queries; q++) {
      const hover = { x: rng() * 1600, y: rng() * 900 };
      const t0 = performance.now();
      labelsNearPointer(grid, terms, xs, ys, { ...state, hover });
      worst = Math.max(worst, performance.now() - t0);
    }
    expect(worst).toBeLessThan(50);

    // a filter flip rebuilds the index; that path must stay interactive too
    const t0 = performance.now();
    grid.rebuild(xs, ys);
    expect(performance.now() - t0).toBeLessThan(50);
    console.log(
      `[ACCEPTANCE] criterion 10 (hover latency, 44k points): PASS, worst query ${worst.toFixed(2)} ms`);
  });
});
