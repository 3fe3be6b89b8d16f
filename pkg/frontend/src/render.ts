/**
 * Canvas rendering of the v-tf plane: immediate-mode marks for every
 * visible word, dark bin-mean symbols, the mean-vector baseline, axes
 * and hover labels.
 */

import { WordClass } from "./classify.js";
import { classOf } from "./filter.js";
import { HoverLabel } from "./hover.js";
import { linearTicks, logTicks, PlaneProjection } from "./scale.js";
import { PlotState } from "./state.js";
import { PlaneData } from "./types.js";

export const CLASS_COLORS: Record<WordClass, string> = {
  noun: "#d62728",
  "proper-noun": "#9467bd",
  adjective: "#1f77b4",
  verb: "#2ca02c",
  adverb: "#ff7f0e",
  function: "#17becf",
  other: "#7f7f7f",
};

const POINT_COLOR = "#4878a8";
const BIN_COLOR = "#101830";
const MEAN_LINE_COLOR = "#666666";
const HIGHLIGHT_COLOR = "#e31a1c";

export interface ProjectedPoints {
  /** visible-set word indices into data.words */
  wordIndex: number[];
  terms: string[];
  xs: Float64Array;
  ys: Float64Array;
}

/** Project the visible records that fall inside the viewport. */
export function projectPoints(
  data: PlaneData,
  visible: readonly number[],
  proj: PlaneProjection,
): ProjectedPoints {
  const wordIndex: number[] = [];
  const terms: string[] = [];
  const xs: number[] = [];
  const ys: number[] = [];
  for (const i of visible) {
    const w = data.words[i];
    if (!proj.contains(w.tf, w.v)) {
      continue;
    }
    wordIndex.push(i);
    terms.push(w.t);
    xs.push(proj.xOf(w.tf));
    ys.push(proj.yOf(w.v));
  }
  return { wordIndex, terms, xs: Float64Array.from(xs), ys: Float64Array.from(ys) };
}

export function renderPlane(
  ctx: CanvasRenderingContext2D,
  data: PlaneData,
  points: ProjectedPoints,
  proj: PlaneProjection,
  state: PlotState,
  labels: HoverLabel[],
): void {
  const { area } = proj;
  ctx.clearRect(0, 0, area.left + area.width + 40, area.top + area.height + 40);
  drawAxes(ctx, proj);

  // mean-vector baseline
  const meanY = proj.yOf(data.meta.mean_vec_len);
  if (meanY >= area.top && meanY <= area.top + area.height) {
    ctx.strokeStyle = MEAN_LINE_COLOR;
    ctx.lineWidth = 1;
    ctx.setLineDash([5, 4]);
    ctx.beginPath();
    ctx.moveTo(area.left, meanY);
    ctx.lineTo(area.left + area.width, meanY);
    ctx.stroke();
    ctx.setLineDash([]);
  }

  // one mark per visible word
  const colorize = state.classes !== null;
  for (let p = 0; p < points.wordIndex.length; p++) {
    const cls = colorize ? classOf(data, points.wordIndex[p]) : null;
    ctx.fillStyle = cls === null ? POINT_COLOR : CLASS_COLORS[cls];
    ctx.fillRect(points.xs[p] - 1, points.ys[p] - 1, 2, 2);
  }

  // dark bin means, joined as a guide for the eye
  ctx.fillStyle = BIN_COLOR;
  ctx.strokeStyle = BIN_COLOR;
  ctx.lineWidth = 1;
  let started = false;
  ctx.beginPath();
  for (const b of data.bins) {
    const tf = Math.sqrt(b.lo * b.hi);
    if (!proj.contains(tf, b.mean_v)) {
      continue;
    }
    const x = proj.xOf(tf);
    const y = proj.yOf(b.mean_v);
    if (started) {
      ctx.lineTo(x, y);
    } else {
      ctx.moveTo(x, y);
      started = true;
    }
  }
  ctx.stroke();
  for (const b of data.bins) {
    const tf = Math.sqrt(b.lo * b.hi);
    if (!proj.contains(tf, b.mean_v)) {
      continue;
    }
    ctx.beginPath();
    ctx.arc(proj.xOf(tf), proj.yOf(b.mean_v), 3.5, 0, 2 * Math.PI);
    ctx.fill();
  }

  if (state.highlight !== null) {
    const hit = data.words.find((w) => w.t === state.highlight);
    if (hit && proj.contains(hit.tf, hit.v)) {
      ctx.strokeStyle = HIGHLIGHT_COLOR;
      ctx.lineWidth = 2;
      ctx.beginPath();
      ctx.arc(proj.xOf(hit.tf), proj.yOf(hit.v), 7, 0, 2 * Math.PI);
      ctx.stroke();
    }
  }

  drawLabels(ctx, labels);
}

function drawAxes(ctx: CanvasRenderingContext2D, proj: PlaneProjection): void {
  const { area, viewport } = proj;
  ctx.strokeStyle = "#222222";
  ctx.lineWidth = 1;
  ctx.strokeRect(area.left, area.top, area.width, area.height);

  ctx.fillStyle = "#222222";
  ctx.font = "11px sans-serif";
  ctx.textAlign = "center";
  ctx.textBaseline = "top";
  for (const tick of logTicks(viewport.tfLo, viewport.tfHi)) {
    const x = proj.xOf(tick);
    ctx.beginPath();
    ctx.moveTo(x, area.top + area.height);
    ctx.lineTo(x, area.top + area.height + 5);
    ctx.stroke();
    ctx.fillText(formatTf(tick), x, area.top + area.height + 7);
  }
  ctx.textAlign = "right";
  ctx.textBaseline = "middle";
  for (const tick of linearTicks(viewport.vLo, viewport.vHi)) {
    const y = proj.yOf(tick);
    ctx.beginPath();
    ctx.moveTo(area.left - 5, y);
    ctx.lineTo(area.left, y);
    ctx.stroke();
    ctx.fillText(String(tick), area.left - 8, y);
  }
  ctx.textAlign = "center";
  ctx.textBaseline = "bottom";
  ctx.fillText("term frequency", area.left + area.width / 2, area.top + area.height + 34);
  ctx.save();
  ctx.translate(area.left - 38, area.top + area.height / 2);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText("vector length", 0, 0);
  ctx.restore();
}

function drawLabels(ctx: CanvasRenderingContext2D, labels: HoverLabel[]): void {
  ctx.font = "12px sans-serif";
  ctx.textAlign = "left";
  ctx.textBaseline = "middle";
  for (const label of labels) {
    const w = ctx.measureText(label.term).width;
    ctx.fillStyle = "rgba(255, 255, 250, 0.88)";
    ctx.fillRect(label.x + 5, label.y - 8, w + 6, 16);
    ctx.fillStyle = "#111111";
    ctx.fillText(label.term, label.x + 8, label.y);
    ctx.fillStyle = HIGHLIGHT_COLOR;
    ctx.fillRect(label.x - 1.5, label.y - 1.5, 3, 3);
  }
}

function formatTf(tick: number): string {
  if (tick >= 1_000_000) {
    return `${tick / 1_000_000}M`;
  }
  if (tick >= 1000) {
    return `${tick / 1000}k`;
  }
  return String(tick);
}
