import { PlaneData, WordRecord } from "../src/types.js";

/** Small deterministic generator for test fixtures. */
export function makeRng(seed: number): () => number {
  let s = seed >>> 0;
  return () => {
    s = (s * 1664525 + 1013904223) >>> 0;
    return s / 0x100000000;
  };
}

const TAGS = ["NN", "NNP", "JJ", "VB", "RB", "IN", "DT", "FW", null];

export function makePlane(nWords: number, seed = 1): PlaneData {
  const rng = makeRng(seed);
  const words: WordRecord[] = [];
  for (let i = 0; i < nWords; i++) {
    words.push({
      t: `term${String(i).padStart(5, "0")}`,
      tf: 1 + Math.floor(Math.pow(10, rng() * 4.5)),
      v: rng() * 6,
      pos: TAGS[Math.floor(rng() * TAGS.length)],
    });
  }
  words.sort((a, b) => b.tf - a.tf || (a.t < b.t ? -1 : 1));
  const byBin = new Map<number, { sum: number; n: number }>();
  for (const w of words) {
    const k = Math.floor(Math.log2(w.tf)) + 1;
    const entry = byBin.get(k) ?? { sum: 0, n: 0 };
    entry.sum += w.v;
    entry.n += 1;
    byBin.set(k, entry);
  }
  const bins = [...byBin.entries()].sort((a, b) => a[0] - b[0]).map(([k, { sum, n }]) => ({
    k,
    lo: 2 ** (k - 1),
    hi: 2 ** k - 1,
    n,
    mean_v: sum / n,
  }));
  return {
    meta: {
      corpus_name: "fixture",
      dim: 100,
      total_tokens: words.reduce((acc, w) => acc + w.tf, 0),
      mean_vec_len: 1.37,
      min_tf: 1,
    },
    words,
    bins,
  };
}
