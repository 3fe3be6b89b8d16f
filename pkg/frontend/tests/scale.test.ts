import { describe, expect, it } from "vitest";

import { projectPoints } from "../src/render.js";
import { linearTicks, logTicks, PlaneProjection, validViewport } from "../src/scale.js";
import { makePlane, makeRng } from "./helpers.js";

const AREA = { left: 50, top: 10, width: 700, height: 440 };

describe("plane projection", () => {
  const proj = new PlaneProjection({ tfLo: 1, tfHi: 10_000, vLo: 0, vHi: 8 }, AREA);

  it("is monotone in log(tf) on x and in v on y", () => {
    const rng = makeRng(2);
    for (let i = 0; i < 200; i++) {
      const a = 1 + rng() * 9999;
      const b = 1 + rng() * 9999;
      if (a !== b) {
        expect(Math.sign(proj.xOf(a) - proj.xOf(b))).toBe(Math.sign(Math.log10(a) - Math.log10(b)));
      }
      const va = rng() * 8;
      const vb = rng() * 8;
      if (va !== vb) {
        // screen y grows downward
        expect(Math.sign(proj.yOf(va) - proj.yOf(vb))).toBe(Math.sign(vb - va));
      }
    }
  });

  it("inverts exactly", () => {
    const rng = makeRng(5);
    for (let i = 0; i < 100; i++) {
      const tf = 1 + rng() * 9999;
      const v = rng() * 8;
      expect(proj.tfAt(proj.xOf(tf))).toBeCloseTo(tf, 6);
      expect(proj.vAt(proj.yOf(v))).toBeCloseTo(v, 8);
    }
  });

  it("maps the viewport corners onto the plot area", () => {
    expect(proj.xOf(1)).toBeCloseTo(AREA.left, 8);
    expect(proj.xOf(10_000)).toBeCloseTo(AREA.left + AREA.width, 8);
    expect(proj.yOf(0)).toBeCloseTo(AREA.top + AREA.height, 8);
    expect(proj.yOf(8)).toBeCloseTo(AREA.top, 8);
  });

  it("a single word lands at (log tf, v)", () => {
    // tf=2, v=1.5 -> x at log10(2) fraction of a 1..10000 viewport
    const frac = Math.log10(2) / Math.log10(10_000);
    expect(proj.xOf(2)).toBeCloseTo(AREA.left + frac * AREA.width, 8);
    expect(proj.yOf(1.5)).toBeCloseTo(AREA.top + (1 - 1.5 / 8) * AREA.height, 8);
  });
});

describe("viewport validity", () => {
  it("accepts ordered positive-frequency bounds only", () => {
    expect(validViewport({ tfLo: 1, tfHi: 10, vLo: 0, vHi: 1 })).toBe(true);
    expect(validViewport({ tfLo: 0, tfHi: 10, vLo: 0, vHi: 1 })).toBe(false);
    expect(validViewport({ tfLo: 5, tfHi: 5, vLo: 0, vHi: 1 })).toBe(false);
    expect(validViewport({ tfLo: 1, tfHi: 10, vLo: 2, vHi: 1 })).toBe(false);
    expect(validViewport({ tfLo: NaN, tfHi: 10, vLo: 0, vHi: 1 })).toBe(false);
  });
});

describe("ticks", () => {
  it("log ticks are the covered powers of ten", () => {
    expect(logTicks(0.9, 25_000)).toEqual([1, 10, 100, 1000, 10_000]);
    expect(logTicks(2, 90)).toEqual([10]);
  });

  it("linear ticks cover the range at a round step", () => {
    const ticks = linearTicks(0, 7.3);
    expect(ticks[0]).toBeGreaterThanOrEqual(0);
    expect(ticks[ticks.length - 1]).toBeLessThanOrEqual(7.3);
    expect(ticks.length).toBeGreaterThanOrEqual(4);
  });
});

describe("projectPoints", () => {
  it("an empty visible set projects to an empty plot", () => {
    const data = makePlane(20, 3);
    const proj = new PlaneProjection({ tfLo: 1, tfHi: 1000, vLo: 0, vHi: 8 }, AREA);
    const points = projectPoints(data, [], proj);
    expect(points.wordIndex).toEqual([]);
    expect(points.xs.length).toBe(0);
  });

  it("projects exactly the visible-and-in-viewport records", () => {
    const data = makePlane(500, 6);
    const proj = new PlaneProjection({ tfLo: 10, tfHi: 1000, vLo: 1, vHi: 5 }, AREA);
    const visible = data.words.map((_, i) => i);
    const points = projectPoints(data, visible, proj);
    const expected = visible.filter((i) => {
      const w = data.words[i];
      return w.tf >= 10 && w.tf <= 1000 && w.v >= 1 && w.v <= 5;
    });
    expect(points.wordIndex).toEqual(expected);
    for (let p = 0; p < points.wordIndex.length; p++) {
      const w = data.words[points.wordIndex[p]];
      expect(points.xs[p]).toBeCloseTo(proj.xOf(w.tf), 8);
      expect(points.ys[p]).toBeCloseTo(proj.yOf(w.v), 8);
      expect(points.terms[p]).toBe(w.t);
    }
  });
});
