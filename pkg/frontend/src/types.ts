/**
 * Schema of the exported corpus data file served at /data.
 */

export interface PlaneMeta {
  corpus_name: string;
  dim: number;
  total_tokens: number;
  mean_vec_len: number;
  min_tf: number;
}

export interface WordRecord {
  /** term */
  t: string;
  /** raw term frequency, >= 1 */
  tf: number;
  /** vector length (L2 norm of the input vector) */
  v: number;
  /** majority POS tag, or null when the term was never tagged */
  pos: string | null;
}

export interface BinRecord {
  k: number;
  lo: number;
  hi: number;
  n: number;
  mean_v: number;
}

export interface PlaneData {
  meta: PlaneMeta;
  words: WordRecord[];
  bins: BinRecord[];
}

export class SchemaError extends Error {}

function isObject(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function requireNumber(obj: Record<string, unknown>, key: string, where: string): number {
  const value = obj[key];
  if (typeof value !== "number" || !Number.isFinite(value)) {
    throw new SchemaError(`${where}: field "${key}" must be a finite number`);
  }
  return value;
}

function requireString(obj: Record<string, unknown>, key: string, where: string): string {
  const value = obj[key];
  if (typeof value !== "string") {
    throw new SchemaError(`${where}: field "${key}" must be a string`);
  }
  return value;
}

/** Validate a parsed /data payload; throws SchemaError on any violation. */
export function validatePlane(payload: unknown): PlaneData {
  if (!isObject(payload)) {
    throw new SchemaError("data file: top level must be an object");
  }
  if (!isObject(payload.meta)) {
    throw new SchemaError("data file: missing meta object");
  }
  const meta: PlaneMeta = {
    corpus_name: requireString(payload.meta, "corpus_name", "meta"),
    dim: requireNumber(payload.meta, "dim", "meta"),
    total_tokens: requireNumber(payload.meta, "total_tokens", "meta"),
    mean_vec_len: requireNumber(payload.meta, "mean_vec_len", "meta"),
    min_tf: requireNumber(payload.meta, "min_tf", "meta"),
  };
  if (!Array.isArray(payload.words)) {
    throw new SchemaError("data file: words must be an array");
  }
  if (!Array.isArray(payload.bins)) {
    throw new SchemaError("data file: bins must be an array");
  }
  const words = payload.words.map((rec, i) => {
    if (!isObject(rec)) {
      throw new SchemaError(`words[${i}]: must be an object`);
    }
    const where = `words[${i}]`;
    const tf = requireNumber(rec, "tf", where);
    if (tf < 1) {
      throw new SchemaError(`${where}: tf must be >= 1`);
    }
    const v = requireNumber(rec, "v", where);
    if (v < 0) {
      throw new SchemaError(`${where}: v must be >= 0`);
    }
    const pos = rec.pos === null || rec.pos === undefined ? null : rec.pos;
    if (pos !== null && typeof pos !== "string") {
      throw new SchemaError(`${where}: pos must be a string or null`);
    }
    return { t: requireString(rec, "t", where), tf, v, pos };
  });
  const bins = payload.bins.map((rec, i) => {
    if (!isObject(rec)) {
      throw new SchemaError(`bins[${i}]: must be an object`);
    }
    const where = `bins[${i}]`;
    return {
      k: requireNumber(rec, "k", where),
      lo: requireNumber(rec, "lo", where),
      hi: requireNumber(rec, "hi", where),
      n: requireNumber(rec, "n", where),
      mean_v: requireNumber(rec, "mean_v", where),
    };
  });
  return { meta, words, bins };
}
