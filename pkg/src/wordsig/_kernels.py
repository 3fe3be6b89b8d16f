"""Compiled inner loops for skip-gram negative-sampling training.

The hot path is JIT-compiled with numba and releases the GIL so that
multiple worker threads can update the shared weight matrices without
locks (asynchronous SGD; lost updates are tolerated by contract).
Randomness comes from an explicit 64-bit LCG threaded through the loop,
so a single worker with a fixed seed is bit-reproducible.
"""

import numpy as np
from numba import njit

# Same 64-bit linear congruential generator the classic word2vec tool uses.
_LCG_MULT = np.uint64(25214903917)
_LCG_ADD = np.uint64(11)
_U32 = np.uint64(32)
_U40 = np.uint64(40)
_INV24 = 1.0 / 16777216.0

SIGMOID_TABLE_SIZE = 1000
SIGMOID_MAX_X = 6.0

# Reassociation/contraction allow the dot products to vectorize, but NaN
# semantics are kept so the divergence guard still fires.
_FASTMATH = {"reassoc", "contract", "arcp", "nsz"}


def build_sigmoid_table(size=SIGMOID_TABLE_SIZE, max_x=SIGMOID_MAX_X):
    """Lookup table of sigmoid values over [-max_x, max_x)."""
    x = (2.0 * np.arange(size) / size - 1.0) * max_x
    return (1.0 / (1.0 + np.exp(-x))).astype(np.float32)


@njit(cache=True, inline="always")
def _lcg(state):
    return state * _LCG_MULT + _LCG_ADD


@njit(cache=True, inline="always")
def _rand_below(state, n):
    # multiply-shift on the upper 32 bits; n must be < 2**32
    return np.int64((np.uint64(np.uint32(state >> _U32)) * np.uint64(n)) >> _U32)


@njit(cache=True, inline="always")
def _rand_unit(state):
    return np.float64(state >> _U40) * _INV24


@njit(cache=True, inline="always")
def _softplus(x):
    # log(1 + e^x) without overflow
    if x > 0.0:
        return x + np.log1p(np.exp(-x))
    return np.log1p(np.exp(x))


@njit(cache=True, nogil=True, fastmath=_FASTMATH)
def run_epoch(tokens, offsets, doc_order, w_in, w_out, keep_prob,
              alias, threshold, sig_table, exact_sigmoid,
              window, negative, alpha0, min_alpha,
              state, progress, total_scheduled, track_loss,
              buf, acc, counts_out, loss_out, err_out):
    """One pass of one worker over its share of documents.

    ``progress`` is shared across workers and drives the linear learning
    rate decay; it is updated without synchronization.  On a non-finite
    activation the offending vocabulary index is written to ``err_out``
    and the pass stops early.
    """
    d = w_in.shape[1]
    table_size = alias.shape[0]
    half = np.float32(SIGMOID_MAX_X)
    scale = np.float32(SIGMOID_TABLE_SIZE / (2.0 * SIGMOID_MAX_X))
    loss = 0.0
    pairs = 0
    positions = 0

    for oi in range(doc_order.shape[0]):
        di = doc_order[oi]
        start = offsets[di]
        end = offsets[di + 1]
        if end <= start:
            continue
        alpha = alpha0 * (1.0 - progress[0] / (total_scheduled + 1.0))
        if alpha < min_alpha:
            alpha = min_alpha
        alpha32 = np.float32(alpha)

        # subsample frequent types; context windows span the survivors
        m = 0
        for t in range(start, end):
            w = tokens[t]
            kp = keep_prob[w]
            if kp < 1.0:
                state = _lcg(state)
                if _rand_unit(state) >= kp:
                    continue
            buf[m] = w
            m += 1

        for pos in range(m):
            center = buf[pos]
            state = _lcg(state)
            b = 1 + _rand_below(state, window)
            lo = pos - b
            if lo < 0:
                lo = 0
            hi = pos + b
            if hi > m - 1:
                hi = m - 1
            vin = w_in[center]
            for cpos in range(lo, hi + 1):
                if cpos == pos:
                    continue
                ctx = buf[cpos]
                for j in range(d):
                    acc[j] = np.float32(0.0)
                for k in range(negative + 1):
                    if k == 0:
                        target = np.int64(ctx)
                        label = np.float32(1.0)
                    else:
                        # redraw on collision with the positive pair, then give up
                        target = np.int64(-1)
                        for _ in range(8):
                            state = _lcg(state)
                            i1 = _rand_below(state, table_size)
                            state = _lcg(state)
                            cand = i1 if _rand_unit(state) < threshold[i1] else alias[i1]
                            if cand != ctx and cand != center:
                                target = cand
                                break
                        if target < 0:
                            continue
                        label = np.float32(0.0)
                    vout = w_out[target]
                    f = np.float32(0.0)
                    for j in range(d):
                        f += vout[j] * vin[j]
                    if not np.isfinite(f):
                        err_out[0] = center
                        counts_out[0] += positions
                        counts_out[1] += pairs
                        loss_out[0] += loss
                        return
                    if exact_sigmoid:
                        s = np.float32(1.0 / (1.0 + np.exp(-np.float64(f))))
                    elif f >= half:
                        s = np.float32(1.0)
                    elif f <= -half:
                        s = np.float32(0.0)
                    else:
                        s = sig_table[np.int64((f + half) * scale)]
                    g = alpha32 * (label - s)
                    if track_loss:
                        loss += _softplus(np.float64(f) if k > 0 else -np.float64(f))
                    for j in range(d):
                        tmp = vout[j]
                        vout[j] = tmp + g * vin[j]
                        acc[j] += g * tmp
                for j in range(d):
                    vin[j] += acc[j]
                pairs += 1
            positions += 1
        progress[0] += end - start

    counts_out[0] += positions
    counts_out[1] += pairs
    loss_out[0] += loss
