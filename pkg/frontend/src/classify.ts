/**
 * Penn-Treebank-style tag -> coarse word class, mirroring the data
 * producer's convention so class filters agree with the exports.
 */

export type WordClass =
  | "noun"
  | "proper-noun"
  | "adjective"
  | "verb"
  | "adverb"
  | "function"
  | "other";

export const WORD_CLASSES: readonly WordClass[] = [
  "noun", "proper-noun", "adjective", "verb", "adverb", "function", "other",
];

const FUNCTION_TAGS = new Set([
  "IN", "PRP", "PRP$", "WP", "WP$", "DT", "PDT", "WDT", "CC", "MD", "RP",
]);

const FAMILIES: ReadonlyArray<[WordClass, ReadonlySet<string>]> = [
  ["noun", new Set(["NN", "NNS"])],
  ["proper-noun", new Set(["NNP", "NNPS"])],
  ["adjective", new Set(["JJ", "JJR", "JJS"])],
  ["verb", new Set(["VB", "VBD", "VBG", "VBN", "VBP", "VBZ"])],
  ["adverb", new Set(["RB", "RBR", "RBS", "WRB"])],
];

export function classifyTag(tag: string | null): WordClass | null {
  if (tag === null) {
    return null;
  }
  if (FUNCTION_TAGS.has(tag)) {
    return "function";
  }
  for (const [cls, tags] of FAMILIES) {
    if (tags.has(tag)) {
      return cls;
    }
  }
  return "other";
}
