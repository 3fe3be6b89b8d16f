/**
 * Uniform screen-space grid over projected points, for hover queries
 * against tens of thousands of marks without per-node DOM cost.
 */

export class SpatialGrid {
  private readonly cellSize: number;
  private buckets: Map<number, number[]> = new Map();
  private xs: Float64Array = new Float64Array(0);
  private ys: Float64Array = new Float64Array(0);

  constructor(cellSize: number) {
    if (!(cellSize > 0)) {
      throw new Error(`cell size must be positive, got ${cellSize}`);
    }
    this.cellSize = cellSize;
  }

  private key(cx: number, cy: number): number {
    // pack the two cell coordinates; plots stay far below 2^15 cells per axis
    return (cx + 0x8000) * 0x10000 + (cy + 0x8000);
  }

  private cellOf(value: number): number {
    return Math.floor(value / this.cellSize);
  }

  /** Index points by screen position; ids are positions in xs/ys. */
  rebuild(xs: Float64Array | number[], ys: Float64Array | number[]): void {
    if (xs.length !== ys.length) {
      throw new Error("coordinate arrays must have equal length");
    }
    this.xs = Float64Array.from(xs);
    this.ys = Float64Array.from(ys);
    this.buckets = new Map();
    for (let i = 0; i < this.xs.length; i++) {
      const k = this.key(this.cellOf(this.xs[i]), this.cellOf(this.ys[i]));
      const bucket = this.buckets.get(k);
      if (bucket) {
        bucket.push(i);
      } else {
        this.buckets.set(k, [i]);
      }
    }
  }

  get size(): number {
    return this.xs.length;
  }

  /**
   * Ids of all points within `radius` of (x, y), with their distances.
   * Exact: candidates come from the covering cells, then are distance
   * filtered.
   */
  query(x: number, y: number, radius: number): Array<{ id: number; dist: number }> {
    if (!(radius > 0)) {
      throw new Error(`query radius must be positive, got ${radius}`);
    }
    const out: Array<{ id: number; dist: number }> = [];
    const r2 = radius * radius;
    const cx0 = this.cellOf(x - radius);
    const cx1 = this.cellOf(x + radius);
    const cy0 = this.cellOf(y - radius);
    const cy1 = this.cellOf(y + radius);
    for (let cx = cx0; cx <= cx1; cx++) {
      for (let cy = cy0; cy <= cy1; cy++) {
        const bucket = this.buckets.get(this.key(cx, cy));
        if (!bucket) {
          continue;
        }
        for (const id of bucket) {
          const dx = this.xs[id] - x;
          const dy = this.ys[id] - y;
          const d2 = dx * dx + dy * dy;
          if (d2 <= r2) {
            out.push({ id, dist: Math.sqrt(d2) });
          }
        }
      }
    }
    return out;
  }
}
