"""Corpus significance statistics over a trained embedding model.

The unit of analysis is the (vector length, term frequency) pair per
term: lengths are L2 norms of the input vectors, frequencies come from
the vocabulary, and dyadic frequency bins [2^(k-1), 2^k - 1] summarize
the v-tf plane.  All operations are read-only over an immutable model.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import DataFileError, TaggedTokenError

logger = logging.getLogger(__name__)

_HISTOGRAM_CHUNK = 65536

# Tags counted as function words; everything else with a recognized
# prefix falls into a content class.
FUNCTION_TAGS = frozenset({"IN", "PRP", "PRP$", "WP", "WP$", "DT", "PDT", "WDT", "CC", "MD", "RP"})

_TAG_CLASSES = {
    "noun": ("NN", "NNS"),
    "proper-noun": ("NNP", "NNPS"),
    "adjective": ("JJ", "JJR", "JJS"),
    "verb": ("VB", "VBD", "VBG", "VBN", "VBP", "VBZ"),
    "adverb": ("RB", "RBR", "RBS", "WRB"),
}

WORD_CLASSES = ("noun", "proper-noun", "adjective", "verb", "adverb", "function", "other")


@dataclass
class WordStat:
    """Per-term record in the v-tf plane."""

    term: str
    tf: int
    v: float
    pos: Optional[str] = None


@dataclass
class SimilarityHistogram:
    bin_edges: np.ndarray
    counts: np.ndarray
    sample_mean: float
    sample_count: int
    min_tf: int


@dataclass
class BinSummary:
    """Dyadic frequency bin k covering tf in [2^(k-1), 2^k - 1]."""

    k: int
    lo: int
    hi: int
    member_count: int
    mean_v: float


def vector_length(model, term):
    """L2 norm of the term's input vector; KeyError for unknown terms."""
    return float(np.linalg.norm(model.vector(term).astype(np.float64)))


def vector_lengths(model):
    """Lengths of all input vectors, aligned with vocabulary indices."""
    return np.linalg.norm(model.vectors.astype(np.float64), axis=1)


def cosine_similarity(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    na = np.linalg.norm(a)
    nb = np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        raise ValueError("cosine similarity is undefined for zero-length vectors")
    return float(np.dot(a, b) / (na * nb))


def similarity_histogram(model, pair_count=1_000_000, min_tf=2, bins=100, seed=None):
    """Histogram of cosine similarity over random pairs of word vectors.

    Pairs are drawn uniformly over term types with tf >= min_tf, with
    replacement and without regard to frequency; self-pairs and pairs
    with a zero-length operand are rejected (the returned sample_count
    is the number of accepted pairs).  Deterministic for a fixed seed.
    """
    if pair_count < 1:
        raise ValueError("pair_count must be >= 1")
    if bins < 1:
        raise ValueError("bins must be >= 1")
    counts = np.asarray(model.vocab.counts)
    eligible = np.flatnonzero(counts >= min_tf)
    if eligible.size < 2:
        raise ValueError("need at least 2 terms with tf >= %d, found %d"
                         % (min_tf, eligible.size))

    vecs = model.vectors[eligible].astype(np.float64)
    norms = np.linalg.norm(vecs, axis=1)
    nonzero = norms > 0.0
    unit = np.zeros_like(vecs, dtype=np.float32)
    unit[nonzero] = (vecs[nonzero] / norms[nonzero, None]).astype(np.float32)

    rng = np.random.default_rng(seed)
    edges = np.linspace(-1.0, 1.0, bins + 1)
    hist = np.zeros(bins, dtype=np.int64)
    total = 0.0
    accepted = 0
    remaining = pair_count
    n = eligible.size
    while remaining > 0:
        m = min(remaining, _HISTOGRAM_CHUNK)
        i = rng.integers(0, n, size=m)
        j = rng.integers(0, n, size=m)
        mask = (i != j) & nonzero[i] & nonzero[j]
        sims = np.einsum("ij,ij->i", unit[i[mask]], unit[j[mask]])
        np.clip(sims, -1.0, 1.0, out=sims)
        hist += np.histogram(sims, bins=bins, range=(-1.0, 1.0))[0]
        total += float(sims.sum(dtype=np.float64))
        accepted += int(sims.size)
        remaining -= m
    if accepted == 0:
        raise ValueError("no valid pairs could be sampled")
    return SimilarityHistogram(
        bin_edges=edges, counts=hist, sample_mean=total / accepted,
        sample_count=accepted, min_tf=min_tf)


def mean_vector(model, min_tf=1):
    """Unweighted mean of the input vectors of terms with tf >= min_tf.

    One vector per term type; returns (mean vector, its L2 length).
    """
    counts = np.asarray(model.vocab.counts)
    eligible = counts >= min_tf
    if not eligible.any():
        raise ValueError("no terms with tf >= %d" % min_tf)
    mean = model.vectors[eligible].astype(np.float64).mean(axis=0)
    return mean, float(np.linalg.norm(mean))


def bin_index(tf):
    """Dyadic bin index: the unique k >= 1 with 2^(k-1) <= tf <= 2^k - 1."""
    tf = int(tf)
    if tf < 1:
        raise ValueError("tf must be >= 1, got %d" % tf)
    return tf.bit_length()


def bin_range(k):
    if k < 1:
        raise ValueError("bin index must be >= 1")
    return 2 ** (k - 1), 2 ** k - 1


def word_stats(model, lexicon=None):
    """Per-term WordStats ordered by descending tf, then term."""
    lengths = vector_lengths(model)
    stats = []
    for i, (term, tf) in enumerate(model.vocab.items()):
        pos = lexicon.tag(term) if lexicon is not None else None
        stats.append(WordStat(term=term, tf=tf, v=float(lengths[i]), pos=pos))
    stats.sort(key=lambda s: (-s.tf, s.term))
    return stats


def bin_means(stats):
    """One BinSummary per non-empty dyadic bin, ascending k."""
    if not stats:
        raise ValueError("stats must be non-empty")
    sums = Counter()
    members = Counter()
    for s in stats:
        k = bin_index(s.tf)
        sums[k] += s.v
        members[k] += 1
    out = []
    for k in sorted(members):
        lo, hi = bin_range(k)
        out.append(BinSummary(k=k, lo=lo, hi=hi,
                              member_count=members[k], mean_v=sums[k] / members[k]))
    return out


def top_by_length_in_bin(stats, k, n):
    """The n members of bin k with the largest v, descending, ties by term."""
    members = [s for s in stats if bin_index(s.tf) == k]
    members.sort(key=lambda s: (-s.v, s.term))
    return members[:max(n, 0)]


def assign_majority_tag(occurrence_tags, corpus_totals=None):
    """Most frequent tag of a term's occurrences.

    Ties are broken by the tag with the higher corpus-wide total, then
    lexicographically.
    """
    counts = Counter(occurrence_tags)
    if not counts:
        raise ValueError("cannot take a majority over an empty tag multiset")
    totals = corpus_totals or {}
    return min(counts.items(), key=lambda kv: (-kv[1], -totals.get(kv[0], 0), kv[0]))[0]


def load_tagged_tokens(source):
    """Parse ``token<TAB>tag`` lines into per-term tag multisets.

    Tokens are lowercased so they match vocabulary terms; blank lines
    (sentence breaks in tagger output) are skipped.
    """
    multisets = {}
    with open(source, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line:
                continue
            token, sep, tag = line.partition("\t")
            if not sep or not token or not tag or "\t" in tag:
                raise TaggedTokenError("expected token<TAB>tag, got %r" % line, line=lineno)
            multisets.setdefault(token.lower(), Counter())[tag] += 1
    return multisets


def classify_word_class(tag):
    """Map a Penn-Treebank-style tag to a coarse word class."""
    if tag in FUNCTION_TAGS:
        return "function"
    for cls, tags in _TAG_CLASSES.items():
        if tag in tags:
            return cls
    return "other"


class PosLexicon:
    """Majority POS tag per term, with coarse word-class lookup."""

    def __init__(self, tag_by_term):
        self.tag_by_term = dict(tag_by_term)

    @classmethod
    def from_tag_multisets(cls, multisets):
        totals = Counter()
        for tags in multisets.values():
            totals.update(tags)
        return cls({term: assign_majority_tag(tags, totals)
                    for term, tags in multisets.items()})

    def __len__(self):
        return len(self.tag_by_term)

    def __contains__(self, term):
        return term in self.tag_by_term

    def tag(self, term):
        return self.tag_by_term.get(term)

    def word_class(self, term):
        tag = self.tag_by_term.get(term)
        return None if tag is None else classify_word_class(tag)


def export_plane(stats, bins, destination, *, corpus_name, dim, total_tokens,
                 mean_vec_len, min_tf=1):
    """Write the explorer data file.

    Words are ordered by descending tf then term; floats are serialized
    at full precision so a reparse reproduces every (term, tf, v) triple
    exactly.
    """
    words = sorted(stats, key=lambda s: (-s.tf, s.term))
    payload = {
        "meta": {
            "corpus_name": corpus_name,
            "dim": int(dim),
            "total_tokens": int(total_tokens),
            "mean_vec_len": float(mean_vec_len),
            "min_tf": int(min_tf),
        },
        "words": [{"t": s.term, "tf": int(s.tf), "v": float(s.v), "pos": s.pos}
                  for s in words],
        "bins": [{"k": int(b.k), "lo": int(b.lo), "hi": int(b.hi),
                  "n": int(b.member_count), "mean_v": float(b.mean_v)}
                 for b in bins],
    }
    with open(destination, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, ensure_ascii=False, separators=(",", ":"))
        fh.write("\n")


_META_KEYS = ("corpus_name", "dim", "total_tokens", "mean_vec_len", "min_tf")


def load_plane(source):
    """Parse and validate an explorer data file."""
    text = Path(source).read_text("utf-8")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataFileError("invalid data file %s: %s at line %d column %d (char %d)"
                            % (source, exc.msg, exc.lineno, exc.colno, exc.pos))
    if not isinstance(payload, dict):
        raise DataFileError("data file %s: top level must be an object" % source)
    for key in ("meta", "words", "bins"):
        if key not in payload:
            raise DataFileError("data file %s: missing %r" % (source, key))
    meta = payload["meta"]
    if not isinstance(meta, dict) or any(k not in meta for k in _META_KEYS):
        raise DataFileError("data file %s: meta must carry %s" % (source, ", ".join(_META_KEYS)))
    for rec in payload["words"]:
        if not isinstance(rec, dict) or any(k not in rec for k in ("t", "tf", "v")):
            raise DataFileError("data file %s: malformed word record %r" % (source, rec))
    for rec in payload["bins"]:
        if not isinstance(rec, dict) or any(k not in rec for k in ("k", "lo", "hi", "n", "mean_v")):
            raise DataFileError("data file %s: malformed bin record %r" % (source, rec))
    return payload


def write_histogram_csv(hist, destination):
    """``bin_lo,bin_hi,count`` rows under a one-line summary header."""
    with open(destination, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# mean=%s pairs=%d min_tf=%d\n"
                 % (repr(hist.sample_mean), hist.sample_count, hist.min_tf))
        for i in range(hist.counts.size):
            fh.write("%s,%s,%d\n"
                     % (repr(float(hist.bin_edges[i])), repr(float(hist.bin_edges[i + 1])),
                        int(hist.counts[i])))
