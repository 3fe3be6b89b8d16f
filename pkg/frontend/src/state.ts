/**
 * Plot state and its reducer. All interactions funnel through
 * `update`, so state transitions are serialized and pure; the URL hash
 * codec makes any view shareable.
 */

import { WORD_CLASSES, WordClass } from "./classify.js";
import { validViewport, Viewport } from "./scale.js";
import { PlaneData } from "./types.js";

export const DEFAULT_LABEL_RADIUS = 24;
export const DEFAULT_MAX_LABELS = 12;

export interface PlotState {
  viewport: Viewport;
  /** pointer position in screen coordinates, null when outside */
  hover: { x: number; y: number } | null;
  /** active class filters; null means the filter is off (all visible) */
  classes: ReadonlySet<WordClass> | null;
  query: string;
  /** exact-match highlighted term */
  highlight: string | null;
  notice: string | null;
  showSingletons: boolean;
  labelRadius: number;
  maxLabels: number;
}

export type Action =
  | { kind: "set-viewport"; viewport: Viewport }
  | { kind: "zoom"; factor: number; focusTf: number; focusV: number }
  | { kind: "pan"; dTfFactor: number; dV: number }
  | { kind: "hover"; x: number; y: number }
  | { kind: "hover-end" }
  | { kind: "toggle-class"; wordClass: WordClass }
  | { kind: "set-classes"; classes: ReadonlySet<WordClass> | null }
  | { kind: "search"; query: string; data: PlaneData }
  | { kind: "toggle-singletons" }
  | { kind: "reset-viewport"; data: PlaneData };

export function dataViewport(data: PlaneData): Viewport {
  let tfHi = 2;
  let vHi = 1;
  for (const w of data.words) {
    if (w.tf > tfHi) {
      tfHi = w.tf;
    }
    if (w.v > vHi) {
      vHi = w.v;
    }
  }
  return { tfLo: 0.9, tfHi: tfHi * 1.3, vLo: 0, vHi: vHi * 1.05 };
}

export function initialState(data: PlaneData): PlotState {
  return {
    viewport: dataViewport(data),
    hover: null,
    classes: null,
    query: "",
    highlight: null,
    notice: null,
    showSingletons: true,
    labelRadius: DEFAULT_LABEL_RADIUS,
    maxLabels: DEFAULT_MAX_LABELS,
  };
}

/** Canonicalize: selecting every class is the same as no filter. */
function canonicalClasses(classes: ReadonlySet<WordClass> | null): ReadonlySet<WordClass> | null {
  if (classes !== null && classes.size === WORD_CLASSES.length) {
    return null;
  }
  return classes;
}

function clampViewport(vp: Viewport, fallback: Viewport): Viewport {
  return validViewport(vp) ? vp : fallback;
}

export function update(state: PlotState, action: Action): PlotState {
  switch (action.kind) {
    case "set-viewport":
      return { ...state, viewport: clampViewport(action.viewport, state.viewport) };
    case "zoom": {
      const { tfLo, tfHi, vLo, vHi } = state.viewport;
      const f = action.factor;
      const logFocus = Math.log10(action.focusTf);
      const logLo = logFocus + (Math.log10(tfLo) - logFocus) * f;
      const logHi = logFocus + (Math.log10(tfHi) - logFocus) * f;
      const next: Viewport = {
        tfLo: Math.pow(10, logLo),
        tfHi: Math.pow(10, logHi),
        vLo: action.focusV + (vLo - action.focusV) * f,
        vHi: action.focusV + (vHi - action.focusV) * f,
      };
      return { ...state, viewport: clampViewport(next, state.viewport) };
    }
    case "pan": {
      const { tfLo, tfHi, vLo, vHi } = state.viewport;
      const next: Viewport = {
        tfLo: tfLo * action.dTfFactor,
        tfHi: tfHi * action.dTfFactor,
        vLo: vLo + action.dV,
        vHi: vHi + action.dV,
      };
      return { ...state, viewport: clampViewport(next, state.viewport) };
    }
    case "hover":
      return { ...state, hover: { x: action.x, y: action.y } };
    case "hover-end":
      return { ...state, hover: null };
    case "toggle-class": {
      const current = new Set<WordClass>(state.classes ?? WORD_CLASSES);
      if (current.has(action.wordClass)) {
        current.delete(action.wordClass);
      } else {
        current.add(action.wordClass);
      }
      return { ...state, classes: canonicalClasses(current) };
    }
    case "set-classes":
      return { ...state, classes: canonicalClasses(action.classes) };
    case "search":
      return applySearch(state, action.query, action.data);
    case "toggle-singletons":
      return { ...state, showSingletons: !state.showSingletons };
    case "reset-viewport":
      return { ...state, viewport: dataViewport(action.data) };
  }
}

/**
 * Exact-match search: center the viewport on the hit keeping the zoom
 * level; a miss leaves the viewport untouched and posts a notice.
 */
function applySearch(state: PlotState, query: string, data: PlaneData): PlotState {
  const trimmed = query.trim();
  if (trimmed === "") {
    return { ...state, query: "", highlight: null, notice: null };
  }
  const hit = data.words.find((w) => w.t === trimmed);
  if (!hit) {
    return { ...state, query, highlight: null, notice: `"${trimmed}" not found` };
  }
  const { tfLo, tfHi, vLo, vHi } = state.viewport;
  const halfLog = (Math.log10(tfHi) - Math.log10(tfLo)) / 2;
  const halfV = (vHi - vLo) / 2;
  const viewport: Viewport = {
    tfLo: Math.pow(10, Math.log10(hit.tf) - halfLog),
    tfHi: Math.pow(10, Math.log10(hit.tf) + halfLog),
    vLo: hit.v - halfV,
    vHi: hit.v + halfV,
  };
  return { ...state, query, highlight: hit.t, notice: null, viewport };
}

/** Serialize the shareable parts of the state into a URL hash. */
export function encodeHash(state: PlotState): string {
  const vp = state.viewport;
  const parts = [
    `x=${vp.tfLo.toPrecision(6)},${vp.tfHi.toPrecision(6)}`,
    `y=${vp.vLo.toPrecision(6)},${vp.vHi.toPrecision(6)}`,
  ];
  if (state.classes !== null) {
    parts.push(`cls=${[...state.classes].sort().join(",")}`);
  }
  if (state.highlight !== null) {
    parts.push(`q=${encodeURIComponent(state.highlight)}`);
  }
  if (!state.showSingletons) {
    parts.push("tf1=0");
  }
  return parts.join("&");
}

/** Apply a URL hash onto a state; malformed fields are ignored. */
export function decodeHash(hash: string, state: PlotState): PlotState {
  let next = state;
  const fields = new Map<string, string>();
  for (const part of hash.replace(/^#/, "").split("&")) {
    const eq = part.indexOf("=");
    if (eq > 0) {
      fields.set(part.slice(0, eq), part.slice(eq + 1));
    }
  }
  const x = fields.get("x")?.split(",").map(Number);
  const y = fields.get("y")?.split(",").map(Number);
  if (x?.length === 2 && y?.length === 2) {
    const viewport: Viewport = { tfLo: x[0], tfHi: x[1], vLo: y[0], vHi: y[1] };
    if (validViewport(viewport)) {
      next = { ...next, viewport };
    }
  }
  const cls = fields.get("cls");
  if (cls !== undefined) {
    const parsed = cls.split(",").filter((c): c is WordClass =>
      (WORD_CLASSES as readonly string[]).includes(c));
    next = { ...next, classes: canonicalClasses(new Set(parsed)) };
  }
  const q = fields.get("q");
  if (q) {
    next = { ...next, query: decodeURIComponent(q), highlight: decodeURIComponent(q) };
  }
  if (fields.get("tf1") === "0") {
    next = { ...next, showSingletons: false };
  }
  return next;
}
