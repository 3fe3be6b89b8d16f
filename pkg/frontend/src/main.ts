/**
 * Explorer entry point: fetch /data, validate it, and wire the canvas,
 * toolbar and URL hash to the state reducer.
 */

import { WORD_CLASSES, WordClass } from "./classify.js";
import { visibleIndices } from "./filter.js";
import { SpatialGrid } from "./grid.js";
import { HoverLabel, labelsNearPointer } from "./hover.js";
import { CLASS_COLORS, projectPoints, ProjectedPoints, renderPlane } from "./render.js";
import { PlaneProjection, PlotArea } from "./scale.js";
import { Action, decodeHash, encodeHash, initialState, PlotState, update } from "./state.js";
import { PlaneData, validatePlane } from "./types.js";

const MARGIN = { left: 52, top: 16, right: 16, bottom: 44 };

class Explorer {
  private state: PlotState;
  private points: ProjectedPoints;
  private proj: PlaneProjection;
  private grid = new SpatialGrid(24);
  private renderQueued = false;

  constructor(
    private readonly data: PlaneData,
    private readonly canvas: HTMLCanvasElement,
    private readonly ctx: CanvasRenderingContext2D,
  ) {
    this.state = decodeHash(location.hash, initialState(data));
    this.proj = new PlaneProjection(this.state.viewport, this.plotArea());
    this.points = projectPoints(data, visibleIndices(data, this.state), this.proj);
    this.grid.rebuild(this.points.xs, this.points.ys);
  }

  private plotArea(): PlotArea {
    return {
      left: MARGIN.left,
      top: MARGIN.top,
      width: this.canvas.width - MARGIN.left - MARGIN.right,
      height: this.canvas.height - MARGIN.top - MARGIN.bottom,
    };
  }

  /** Apply an action; reproject and reindex only when the view changed. */
  dispatch(action: Action): void {
    const prev = this.state;
    this.state = update(prev, action);
    if (
      prev.viewport !== this.state.viewport ||
      prev.classes !== this.state.classes ||
      prev.showSingletons !== this.state.showSingletons
    ) {
      this.proj = new PlaneProjection(this.state.viewport, this.plotArea());
      this.points = projectPoints(this.data, visibleIndices(this.data, this.state), this.proj);
      this.grid.rebuild(this.points.xs, this.points.ys);
      history.replaceState(null, "", "#" + encodeHash(this.state));
    }
    this.queueRender();
  }

  resize(): void {
    this.canvas.width = this.canvas.clientWidth;
    this.canvas.height = this.canvas.clientHeight;
    this.proj = new PlaneProjection(this.state.viewport, this.plotArea());
    this.points = projectPoints(this.data, visibleIndices(this.data, this.state), this.proj);
    this.grid.rebuild(this.points.xs, this.points.ys);
    this.queueRender();
  }

  get current(): PlotState {
    return this.state;
  }

  hoverLabels(): HoverLabel[] {
    return labelsNearPointer(
      this.grid, this.points.terms, this.points.xs, this.points.ys, this.state);
  }

  private queueRender(): void {
    if (this.renderQueued) {
      return;
    }
    this.renderQueued = true;
    requestAnimationFrame(() => {
      this.renderQueued = false;
      renderPlane(this.ctx, this.data, this.points, this.proj, this.state, this.hoverLabels());
      syncNotice(this.state);
    });
  }
}

function syncNotice(state: PlotState): void {
  const notice = document.getElementById("notice");
  if (notice) {
    notice.textContent = state.notice ?? "";
  }
}

function buildToolbar(explorer: Explorer, data: PlaneData): void {
  const filters = document.getElementById("filters")!;
  for (const cls of WORD_CLASSES) {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = true;
    box.addEventListener("change", () => {
      explorer.dispatch({ kind: "toggle-class", wordClass: cls as WordClass });
    });
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = CLASS_COLORS[cls as WordClass];
    label.append(box, swatch, cls);
    filters.append(label);
  }

  const form = document.getElementById("search-form") as HTMLFormElement;
  const input = document.getElementById("search") as HTMLInputElement;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    explorer.dispatch({ kind: "search", query: input.value, data });
  });

  (document.getElementById("singletons") as HTMLInputElement).addEventListener(
    "change", () => explorer.dispatch({ kind: "toggle-singletons" }));
  document.getElementById("reset")!.addEventListener(
    "click", () => explorer.dispatch({ kind: "reset-viewport", data }));
}

function wireCanvas(explorer: Explorer, canvas: HTMLCanvasElement): void {
  canvas.addEventListener("mousemove", (event) => {
    const rect = canvas.getBoundingClientRect();
    explorer.dispatch({
      kind: "hover",
      x: event.clientX - rect.left,
      y: event.clientY - rect.top,
    });
  });
  canvas.addEventListener("mouseleave", () => explorer.dispatch({ kind: "hover-end" }));
  canvas.addEventListener("wheel", (event) => {
    event.preventDefault();
    const rect = canvas.getBoundingClientRect();
    const proj = new PlaneProjection(explorer.current.viewport, {
      left: MARGIN.left,
      top: MARGIN.top,
      width: canvas.width - MARGIN.left - MARGIN.right,
      height: canvas.height - MARGIN.top - MARGIN.bottom,
    });
    explorer.dispatch({
      kind: "zoom",
      factor: event.deltaY > 0 ? 1.25 : 0.8,
      focusTf: proj.tfAt(event.clientX - rect.left),
      focusV: proj.vAt(event.clientY - rect.top),
    });
  }, { passive: false });
}

function showError(message: string): void {
  const panel = document.getElementById("error-panel")!;
  panel.textContent = message;
  panel.style.display = "block";
  const canvas = document.getElementById("plane") as HTMLCanvasElement;
  canvas.style.display = "none";
}

async function boot(): Promise<void> {
  let data: PlaneData;
  try {
    const resp = await fetch("/data");
    if (!resp.ok) {
      throw new Error(`GET /data failed: ${resp.status}`);
    }
    data = validatePlane(await resp.json());
  } catch (err) {
    showError(`Cannot load the corpus data file: ${(err as Error).message}`);
    return;
  }

  const canvas = document.getElementById("plane") as HTMLCanvasElement;
  canvas.width = canvas.clientWidth;
  canvas.height = canvas.clientHeight;
  const ctx = canvas.getContext("2d");
  if (!ctx) {
    showError("Canvas 2D is unavailable in this browser.");
    return;
  }

  const explorer = new Explorer(data, canvas, ctx);
  buildToolbar(explorer, data);
  wireCanvas(explorer, canvas);
  window.addEventListener("resize", () => explorer.resize());
  document.getElementById("title")!.textContent =
    `${data.meta.corpus_name}: ${data.words.length} terms, ${data.meta.total_tokens} tokens`;
  explorer.dispatch({ kind: "hover-end" });
}

boot();
