/**
 * Visible-set computation: class filters and the tf=1 toggle.
 */

import { classifyTag, WordClass } from "./classify.js";
import { PlotState } from "./state.js";
import { PlaneData } from "./types.js";

/**
 * Indices of the records the current filters keep, in data order.
 * With an active class filter, records without a POS tag are hidden;
 * with the filter off (classes === null) everything passes.
 */
export function visibleIndices(data: PlaneData, state: PlotState): number[] {
  const out: number[] = [];
  for (let i = 0; i < data.words.length; i++) {
    if (passesFilters(data, state, i)) {
      out.push(i);
    }
  }
  return out;
}

export function passesFilters(data: PlaneData, state: PlotState, index: number): boolean {
  const word = data.words[index];
  if (!state.showSingletons && word.tf <= 1) {
    return false;
  }
  if (state.classes !== null) {
    const cls = classifyTag(word.pos);
    if (cls === null || !state.classes.has(cls)) {
      return false;
    }
  }
  return true;
}

export function classOf(data: PlaneData, index: number): WordClass | null {
  return classifyTag(data.words[index].pos);
}
