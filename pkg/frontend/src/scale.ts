/**
 * Axis projections for the v-tf plane: logarithmic frequency on x,
 * linear vector length on y (screen y grows downward).
 */

export interface Viewport {
  /** frequency axis bounds, 0 < tfLo < tfHi */
  tfLo: number;
  tfHi: number;
  /** vector-length axis bounds, vLo < vHi */
  vLo: number;
  vHi: number;
}

export interface PlotArea {
  left: number;
  top: number;
  width: number;
  height: number;
}

export function validViewport(vp: Viewport): boolean {
  return (
    Number.isFinite(vp.tfLo) && Number.isFinite(vp.tfHi) &&
    Number.isFinite(vp.vLo) && Number.isFinite(vp.vHi) &&
    vp.tfLo > 0 && vp.tfLo < vp.tfHi && vp.vLo < vp.vHi
  );
}

export class PlaneProjection {
  private readonly logLo: number;
  private readonly logHi: number;

  constructor(public readonly viewport: Viewport, public readonly area: PlotArea) {
    this.logLo = Math.log10(viewport.tfLo);
    this.logHi = Math.log10(viewport.tfHi);
  }

  xOf(tf: number): number {
    const frac = (Math.log10(tf) - this.logLo) / (this.logHi - this.logLo);
    return this.area.left + frac * this.area.width;
  }

  yOf(v: number): number {
    const frac = (v - this.viewport.vLo) / (this.viewport.vHi - this.viewport.vLo);
    return this.area.top + (1 - frac) * this.area.height;
  }

  tfAt(x: number): number {
    const frac = (x - this.area.left) / this.area.width;
    return Math.pow(10, this.logLo + frac * (this.logHi - this.logLo));
  }

  vAt(y: number): number {
    const frac = 1 - (y - this.area.top) / this.area.height;
    return this.viewport.vLo + frac * (this.viewport.vHi - this.viewport.vLo);
  }

  contains(tf: number, v: number): boolean {
    return (
      tf >= this.viewport.tfLo && tf <= this.viewport.tfHi &&
      v >= this.viewport.vLo && v <= this.viewport.vHi
    );
  }
}

/** Powers of ten covering the frequency viewport, for axis ticks. */
export function logTicks(tfLo: number, tfHi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.ceil(Math.log10(tfLo)); Math.pow(10, e) <= tfHi + 1e-9; e++) {
    ticks.push(Math.pow(10, e));
  }
  return ticks;
}

/** Round linear ticks at a 1/2/5 step, covering [lo, hi]. */
export function linearTicks(lo: number, hi: number, maxTicks = 8): number[] {
  const span = hi - lo;
  const rawStep = span / Math.max(maxTicks - 1, 1);
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = mag;
  for (const mult of [1, 2, 5, 10]) {
    if (mag * mult >= rawStep) {
      step = mag * mult;
      break;
    }
  }
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + 1e-9; t += step) {
    ticks.push(Number(t.toFixed(10)));
  }
  return ticks;
}
