/**
 * Hover labels: the terms whose marks sit within the label radius of
 * the pointer, nearest first, capped at the configured maximum.
 */

import { SpatialGrid } from "./grid.js";
import { PlotState } from "./state.js";

export interface HoverLabel {
  term: string;
  /** index into the projected point arrays (visible-set order) */
  pointId: number;
  dist: number;
  x: number;
  y: number;
}

/**
 * Query the projected, filtered point set around the pointer.
 * Equidistant points are ordered lexicographically by term; the cap
 * never hides a point that is closer than one which is shown.
 */
export function labelsNearPointer(
  grid: SpatialGrid,
  terms: readonly string[],
  xs: ArrayLike<number>,
  ys: ArrayLike<number>,
  state: PlotState,
): HoverLabel[] {
  if (state.hover === null) {
    return [];
  }
  const hits = grid.query(state.hover.x, state.hover.y, state.labelRadius);
  // code-point comparison keeps the tie order locale-independent
  hits.sort((a, b) =>
    a.dist - b.dist ||
    (terms[a.id] < terms[b.id] ? -1 : terms[a.id] > terms[b.id] ? 1 : 0));
  return hits.slice(0, Math.max(state.maxLabels, 0)).map(({ id, dist }) => ({
    term: terms[id],
    pointId: id,
    dist,
    x: xs[id],
    y: ys[id],
  }));
}
