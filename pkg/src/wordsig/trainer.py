"""Skip-gram negative-sampling embedding trainer.

Trains input vectors W and context vectors W' over a tokenized corpus
with the classic configuration: per-position random window size,
frequent-word subsampling, unigram^0.75 noise distribution and a linear
learning rate decay.  Multiple workers update the shared matrices
without locks; bit-reproducibility is guaranteed only for ``workers=1``
with a fixed seed.
"""

import logging
import threading
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import CorpusError, MemoryLimitError, TrainingDivergedError, VectorFormatError
from .ingest import Vocabulary, build_vocabulary

logger = logging.getLogger(__name__)

_MASK64 = (1 << 64) - 1


@dataclass
class TrainConfig:
    """Training hyperparameters (defaults follow the classic tool)."""

    dim: int = 100
    window: int = 10
    negative: int = 5
    sample: float = 1e-4
    epochs: int = 20
    min_count: int = 1
    alpha: float = 0.025
    workers: int = 1
    seed: int = 1
    exact_sigmoid: bool = False
    track_loss: bool = False
    max_memory_gb: float = 8.0

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if self.negative < 0:
            raise ValueError("negative must be >= 0")
        if not (0.0 < self.sample <= 1.0):
            raise ValueError("sample must be in (0, 1]")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.min_count < 1:
            raise ValueError("min_count must be >= 1")
        if self.alpha <= 0.0:
            raise ValueError("alpha must be > 0")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


class EmbeddingModel:
    """A trained embedding space: vocabulary plus W (input) and W' (context)."""

    def __init__(self, vocab, vectors, context_vectors=None):
        self.vocab = vocab
        self.vectors = vectors
        self.context_vectors = context_vectors
        self.epoch_mean_loss = None

    @property
    def dim(self):
        return self.vectors.shape[1]

    def __len__(self):
        return len(self.vocab)

    def __contains__(self, term):
        return term in self.vocab

    def vector(self, term):
        return self.vectors[self.vocab.index[term]]


class NoiseTable:
    """O(1) weighted sampler over vocabulary indices (Vose alias method)."""

    def __init__(self, weights):
        weights = np.asarray(weights, dtype=np.float64)
        if weights.size == 0:
            raise ValueError("cannot build a noise table over an empty vocabulary")
        if np.any(weights < 0) or weights.sum() <= 0:
            raise ValueError("noise weights must be non-negative with a positive sum")
        self.probs = weights / weights.sum()
        self.alias, self.threshold = _build_alias(self.probs)

    def __len__(self):
        return self.probs.size

    def sample(self, n, seed=None):
        """Draw ``n`` indices with probability ``self.probs``."""
        rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        k = rng.integers(0, len(self), size=n)
        u = rng.random(n)
        return np.where(u < self.threshold[k], k, self.alias[k])


def _build_alias(probs):
    k = probs.size
    alias = np.zeros(k, dtype=np.int64)
    threshold = np.ones(k, dtype=np.float64)
    scaled = probs * k
    small = [i for i in range(k) if scaled[i] < 1.0]
    large = [i for i in range(k) if scaled[i] >= 1.0]
    while small and large:
        s = small.pop()
        l = large.pop()
        threshold[s] = scaled[s]
        alias[s] = l
        scaled[l] -= 1.0 - scaled[s]
        (small if scaled[l] < 1.0 else large).append(l)
    return alias, threshold


def build_noise_table(vocab, power=0.75):
    """Noise distribution P(i) proportional to tf_i ** power."""
    if len(vocab) == 0:
        raise ValueError("cannot build a noise table over an empty vocabulary")
    counts = np.asarray(vocab.counts, dtype=np.float64)
    return NoiseTable(counts ** power)


def subsample_keep_prob(tf, total_tokens, threshold):
    """Probability of keeping one occurrence of a term with count ``tf``.

    min(1, (sqrt(f/(tN)) + 1) * (tN)/f) with f = tf and N = total_tokens;
    non-increasing in f, and 1 whenever f <= tN.
    """
    if tf <= 0:
        raise ValueError("tf must be >= 1, got %r" % (tf,))
    if threshold <= 0:
        raise ValueError("threshold must be > 0")
    tn = threshold * total_tokens
    ratio = tf / tn
    return min(1.0, (np.sqrt(ratio) + 1.0) / ratio)


def _sigmoid_exact(x):
    if x >= 0:
        return 1.0 / (1.0 + np.exp(-x))
    e = np.exp(x)
    return e / (1.0 + e)


_SIG_TABLE = _kernels.build_sigmoid_table()


def _sigmoid_table(x):
    if x >= _kernels.SIGMOID_MAX_X:
        return 1.0
    if x <= -_kernels.SIGMOID_MAX_X:
        return 0.0
    idx = int((x + _kernels.SIGMOID_MAX_X)
              * (_kernels.SIGMOID_TABLE_SIZE / (2.0 * _kernels.SIGMOID_MAX_X)))
    return float(_SIG_TABLE[idx])


def _softplus(x):
    if x > 0:
        return x + np.log1p(np.exp(-x))
    return float(np.log1p(np.exp(x)))


def sgns_step(model, center, context, negatives, alpha, exact_sigmoid=False):
    """Apply one negative-sampling update in place; returns the pair objective.

    For each (x, label) in {(context, 1)} followed by (n, 0) for the
    negatives: with s = sigmoid(W'_x . W_center) and g = alpha*(label-s),
    W'_x += g*W_center while an accumulator collects g*W'_x(old); the
    accumulator is added to W_center at the end.  Negatives are assumed
    not to collide with the positive pair (the trainer redraws them).
    """
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    w_in = model.vectors
    w_out = model.context_vectors
    vin = w_in[center]
    acc = np.zeros_like(vin)
    sigmoid = _sigmoid_exact if exact_sigmoid else _sigmoid_table
    loss = 0.0
    for x, label in [(context, 1.0)] + [(n, 0.0) for n in negatives]:
        f = float(w_out[x] @ vin)
        if not np.isfinite(f):
            raise TrainingDivergedError(
                "non-finite dot product for center index %d, output index %d" % (center, x))
        s = sigmoid(f)
        g = alpha * (label - s)
        acc += g * w_out[x]
        w_out[x] += g * vin
        loss += _softplus(-f) if label else _softplus(f)
    vin += acc.astype(vin.dtype, copy=False)
    return loss


def _mix64(x):
    x &= _MASK64
    x ^= x >> 33
    x = (x * 0xFF51AFD7ED558CCD) & _MASK64
    x ^= x >> 33
    x = (x * 0xC4CEB9FE1A85EC53) & _MASK64
    x ^= x >> 33
    return x


def _stream_seed(seed, epoch, worker):
    """Independent RNG stream per (seed, epoch, worker)."""
    return np.uint64(_mix64((seed & _MASK64) ^ _mix64(0x9E3779B97F4A7C15 * (epoch * 4096 + worker + 1))))


def _flatten_corpus(corpus, vocab):
    offsets = np.zeros(len(corpus) + 1, dtype=np.int64)
    index = vocab.index
    docs = []
    for i, doc in enumerate(corpus):
        ids = [index[t] for t in doc if t in index]
        docs.append(np.asarray(ids, dtype=np.int32))
        offsets[i + 1] = offsets[i] + len(ids)
    total = int(offsets[-1])
    flat = np.empty(total, dtype=np.int32)
    for i, ids in enumerate(docs):
        flat[offsets[i]:offsets[i + 1]] = ids
    return flat, offsets


def train(corpus, config=None):
    """Train an embedding model over a tokenized corpus.

    Makes ``config.epochs`` passes over all documents; per position the
    window size is drawn uniformly from {1..window}, subsampling is
    applied per occurrence, and the learning rate decays linearly from
    ``alpha`` to ``alpha * 1e-4`` over the scheduled token total.
    """
    if config is None:
        config = TrainConfig()
    vocab = build_vocabulary(corpus, config.min_count)
    if len(vocab) == 0:
        raise CorpusError("no terms with count >= %d" % config.min_count)
    v_size = len(vocab)
    dim = config.dim

    need = 2 * v_size * dim * 4
    limit = config.max_memory_gb * 2 ** 30
    if need > limit:
        raise MemoryLimitError(
            "model of %d terms x %d dims needs %.2f GiB, above the %.2f GiB bound"
            % (v_size, dim, need / 2 ** 30, config.max_memory_gb))

    tokens, offsets = _flatten_corpus(corpus, vocab)
    n_tokens = int(tokens.size)
    if n_tokens == 0:
        raise CorpusError("corpus contains no trainable tokens")

    counts = np.asarray(vocab.counts, dtype=np.float64)
    tn = config.sample * n_tokens
    ratio = counts / tn
    keep_prob = np.minimum(1.0, (np.sqrt(ratio) + 1.0) / ratio)

    noise = build_noise_table(vocab)
    sig_table = _SIG_TABLE

    rng = np.random.default_rng(config.seed)
    w_in = (rng.random((v_size, dim), dtype=np.float32) - 0.5) / dim
    w_out = np.zeros((v_size, dim), dtype=np.float32)

    progress = np.zeros(1, dtype=np.int64)
    total_scheduled = config.epochs * n_tokens
    min_alpha = config.alpha * 1e-4
    n_docs = len(offsets) - 1
    max_len = int(np.max(offsets[1:] - offsets[:-1])) if n_docs else 0
    workers = min(config.workers, n_docs)

    logger.info("training: %d docs, %d tokens, %d terms, dim=%d, %d epochs, %d worker(s), seed=%d",
                n_docs, n_tokens, v_size, dim, config.epochs, workers, config.seed)

    epoch_losses = []
    buf = [np.empty(max_len, dtype=np.int32) for _ in range(workers)]
    acc = [np.empty(dim, dtype=np.float32) for _ in range(workers)]
    orders = [np.arange(w, n_docs, workers, dtype=np.int64) for w in range(workers)]

    for epoch in range(config.epochs):
        counts_out = np.zeros((workers, 2), dtype=np.int64)
        loss_out = np.zeros((workers, 1), dtype=np.float64)
        err_out = np.full((workers, 1), -1, dtype=np.int64)

        def run(w, epoch=epoch, counts_out=counts_out, loss_out=loss_out, err_out=err_out):
            _kernels.run_epoch(
                tokens, offsets, orders[w], w_in, w_out, keep_prob,
                noise.alias, noise.threshold, sig_table, config.exact_sigmoid,
                config.window, config.negative, config.alpha, min_alpha,
                _stream_seed(config.seed, epoch, w), progress, total_scheduled,
                config.track_loss, buf[w], acc[w],
                counts_out[w], loss_out[w], err_out[w])

        if workers == 1:
            run(0)
        else:
            threads = [threading.Thread(target=run, args=(w,)) for w in range(workers)]
            for t in threads:
                t.start()
            for t in threads:
                t.join()

        bad = err_out[err_out >= 0]
        if bad.size:
            raise TrainingDivergedError(
                "non-finite activation at epoch %d for term %r; "
                "lower alpha or check the corpus" % (epoch + 1, vocab.words[int(bad[0])]))

        pair_count = int(counts_out[:, 1].sum())
        alpha_now = max(config.alpha * (1.0 - progress[0] / (total_scheduled + 1.0)), min_alpha)
        if config.track_loss:
            mean_loss = float(loss_out.sum() / max(pair_count, 1))
            epoch_losses.append(mean_loss)
            logger.info("epoch %d/%d: %d positions, %d pairs, alpha=%.6f, mean pair loss=%.6f",
                        epoch + 1, config.epochs, int(counts_out[:, 0].sum()), pair_count,
                        alpha_now, mean_loss)
        else:
            logger.info("epoch %d/%d: %d positions, %d pairs, alpha=%.6f",
                        epoch + 1, config.epochs, int(counts_out[:, 0].sum()), pair_count,
                        alpha_now)

    if not (np.isfinite(w_in).all() and np.isfinite(w_out).all()):
        raise TrainingDivergedError("trained matrices contain non-finite components")

    model = EmbeddingModel(vocab, w_in, w_out)
    if config.track_loss:
        model.epoch_mean_loss = epoch_losses
    return model


def _fmt_component(x):
    return np.format_float_positional(np.float32(x), unique=True, trim="0")


def save_vectors(model, destination):
    """Write the input vectors in the text format: header ``V d``, then
    one ``term c1 .. cd`` line per term."""
    vectors = model.vectors
    with open(destination, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("%d %d\n" % (vectors.shape[0], vectors.shape[1]))
        for i, term in enumerate(model.vocab.words):
            fh.write(term)
            for x in vectors[i]:
                fh.write(" ")
                fh.write(_fmt_component(x))
            fh.write("\n")


def load_vectors(source):
    """Parse a text vector file back into an EmbeddingModel.

    Counts are unknown to the vector format and come back as zero; merge
    a vocabulary file via ``model.vocab.set_counts`` when needed.
    """
    with open(source, "r", encoding="utf-8") as fh:
        header = fh.readline()
        parts = header.split()
        if len(parts) != 2:
            raise VectorFormatError("malformed header %r, expected 'V d'" % header.strip(), line=1)
        try:
            v_size, dim = int(parts[0]), int(parts[1])
        except ValueError:
            raise VectorFormatError("malformed header %r, expected 'V d'" % header.strip(), line=1)
        if v_size < 0 or dim < 1:
            raise VectorFormatError("invalid dimensions V=%d d=%d" % (v_size, dim), line=1)

        terms = []
        vectors = np.empty((v_size, dim), dtype=np.float32)
        row = 0
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n").rstrip("\r")
            if not line:
                continue
            if row >= v_size:
                raise VectorFormatError("more rows than the header's %d terms" % v_size, line=lineno)
            parts = line.split(" ")
            if not parts[0]:
                raise VectorFormatError("empty term", line=lineno)
            if len(parts) != dim + 1:
                raise VectorFormatError(
                    "expected %d components for term %r, found %d"
                    % (dim, parts[0], len(parts) - 1), line=lineno)
            try:
                vectors[row] = [np.float32(p) for p in parts[1:]]
            except ValueError:
                raise VectorFormatError("non-numeric component for term %r" % parts[0], line=lineno)
            terms.append(parts[0])
            row += 1
        if row != v_size:
            raise VectorFormatError("header promised %d terms but file has %d" % (v_size, row))

    try:
        vocab = Vocabulary.from_items((t, 0) for t in terms)
    except ValueError as exc:
        raise VectorFormatError(str(exc))
    return EmbeddingModel(vocab, vectors)
