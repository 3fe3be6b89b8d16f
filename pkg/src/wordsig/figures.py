"""Report figures rendered to files alongside the delimited output."""

import logging

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

logger = logging.getLogger(__name__)

_DPI = 150

# Red/blue pair for the two classes of an overlay figure.
CLASS_COLORS = {"a": "#d62728", "b": "#1f77b4"}


def plot_similarity_histogram(hist, path):
    """Bar chart of the cosine-similarity distribution with its mean marked."""
    fig, ax = plt.subplots(figsize=(6, 4))
    centers = 0.5 * (hist.bin_edges[:-1] + hist.bin_edges[1:])
    widths = np.diff(hist.bin_edges)
    ax.bar(centers, hist.counts, width=widths, color="#4c72b0", edgecolor="none")
    ax.axvline(hist.sample_mean, color="#d62728", linestyle="--", linewidth=1,
               label="mean = %.3f" % hist.sample_mean)
    ax.set_xlabel("cosine similarity")
    ax.set_ylabel("pairs")
    ax.set_xlim(-1, 1)
    ax.set_title("similarity of %d random pairs (tf >= %d)" % (hist.sample_count, hist.min_tf))
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    logger.info("wrote %s", path)


def plot_length_vs_frequency(stats, bins, mean_vec_len, path):
    """The v-tf plane: every term, dark bin means, mean-vector baseline."""
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    tf = np.array([s.tf for s in stats])
    v = np.array([s.v for s in stats])
    ax.scatter(tf, v, s=3, alpha=0.25, color="#9ecae1", linewidths=0, label="terms")
    if bins:
        # place each bin mean at the geometric center of its range
        bx = [np.sqrt(b.lo * b.hi) for b in bins]
        by = [b.mean_v for b in bins]
        ax.plot(bx, by, "o-", color="#08306b", markersize=5, linewidth=1, label="bin means")
    ax.axhline(mean_vec_len, color="#555555", linewidth=1, linestyle="-",
               label="mean vector length = %.2f" % mean_vec_len)
    ax.set_xscale("log")
    ax.set_xlabel("term frequency")
    ax.set_ylabel("vector length")
    ax.legend(frameon=False, loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    logger.info("wrote %s", path)


def plot_class_overlay(stats, lexicon, class_a, class_b, path):
    """Two word classes overlaid in the v-tf plane (red vs blue)."""
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    for cls, color in ((class_a, CLASS_COLORS["a"]), (class_b, CLASS_COLORS["b"])):
        sel = [s for s in stats if s.term in lexicon and lexicon.word_class(s.term) == cls]
        if sel:
            ax.scatter([s.tf for s in sel], [s.v for s in sel],
                       s=4, alpha=0.4, color=color, linewidths=0, label=cls)
    ax.set_xscale("log")
    ax.set_xlabel("term frequency")
    ax.set_ylabel("vector length")
    ax.legend(frameon=False, loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    logger.info("wrote %s", path)
