"""Command-line pipeline: ingest -> train -> stats -> serve.

Training flags mirror the classic tool's names (size, window, negative,
sample, iter, min-count, alpha, threads, seed) so published parameter
sets can be transcribed directly.  An optional key=value config file
supplies defaults that explicit flags override.
"""

import argparse
import logging
import sys
from pathlib import Path

from . import analysis, figures, ingest, server, trainer
from .errors import WordsigError

logger = logging.getLogger("wordsig")

_TRAIN_DEFAULTS = {
    "size": 100,
    "window": 10,
    "negative": 5,
    "sample": 1e-4,
    "iter": 20,
    "min_count": 1,
    "alpha": 0.025,
    "threads": 1,
    "seed": 1,
}

_STATS_DEFAULTS = {
    "min_tf": 2,
    "pairs": 1_000_000,
    "hist_bins": 100,
    "top": 50,
    "seed": 1,
}


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %r" % text)
    return value


def _nonnegative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer, got %r" % text)
    return value


def read_config(path):
    """Parse a key=value config file; '#' starts a comment line."""
    values = {}
    for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise WordsigError("config %s line %d: expected key=value" % (path, lineno))
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _resolve(args, defaults):
    """Builtin defaults, overridden by config file, overridden by flags."""
    merged = dict(defaults)
    if getattr(args, "config", None):
        loaded = read_config(args.config)
        for key, text in loaded.items():
            if key in merged:
                merged[key] = type(merged[key])(float(text)) if isinstance(merged[key], float) \
                    else type(merged[key])(text)
    for key in merged:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            merged[key] = flag_value
    return merged


def cmd_ingest(args):
    docs = ingest.iter_documents(args.corpus)
    ids, corpus = ingest.tokenize_documents(docs)
    vocab = ingest.build_vocabulary(corpus, min_count=args.min_count)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    tokens_path = out / "tokens.txt"
    vocab_path = out / "vocab.tsv"
    ingest.write_tokens(corpus, tokens_path)
    ingest.write_vocab(vocab, vocab_path)
    total = corpus.total_tokens
    logger.info("ingested %d documents, %d tokens (%.1f per document), vocabulary of %d terms",
                len(ids), total, total / len(ids), len(vocab))
    logger.info("wrote %s and %s", tokens_path, vocab_path)
    return 0


def cmd_train(args):
    params = _resolve(args, _TRAIN_DEFAULTS)
    corpus = ingest.read_tokens(args.tokens)
    config = trainer.TrainConfig(
        dim=params["size"], window=params["window"], negative=params["negative"],
        sample=params["sample"], epochs=params["iter"], min_count=params["min_count"],
        alpha=params["alpha"], workers=params["threads"], seed=params["seed"],
        exact_sigmoid=args.exact_sigmoid, track_loss=args.track_loss)
    model = trainer.train(corpus, config)
    trainer.save_vectors(model, args.output)
    logger.info("wrote %s", args.output)
    return 0


def _load_model_with_counts(vectors_path, vocab_path):
    model = trainer.load_vectors(vectors_path)
    counts = ingest.read_vocab(vocab_path)
    try:
        model.vocab.set_counts(counts)
    except ValueError as exc:
        raise WordsigError("vector/vocabulary mismatch: %s" % exc)
    return model


def cmd_stats(args):
    params = _resolve(args, _STATS_DEFAULTS)
    model = _load_model_with_counts(args.vectors, args.vocab)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    corpus_name = args.corpus_name or Path(args.vectors).stem
    total_tokens = sum(model.vocab.counts)

    lexicon = None
    if args.tags:
        lexicon = analysis.PosLexicon.from_tag_multisets(analysis.load_tagged_tokens(args.tags))
        logger.info("loaded POS tags for %d terms from %s", len(lexicon), args.tags)

    stats = analysis.word_stats(model, lexicon)

    # Table-style frequency list: stop words and punctuation removed
    stopwords = ingest.load_stopwords()
    ranked = ingest.term_frequency_list(model.vocab, stopwords=stopwords,
                                        exclude_punct=True, top_n=params["top"])
    v_by_term = {s.term: s.v for s in stats}
    freq_path = out / "frequency.tsv"
    with freq_path.open("w", encoding="utf-8", newline="\n") as fh:
        for term, tf in ranked:
            fh.write("%s\t%s\t%d\n" % (term, repr(v_by_term[term]), tf))
    logger.info("wrote %s (%d terms)", freq_path, len(ranked))

    logger.info("similarity histogram: %d pairs, min_tf=%d, %d bins, seed=%d",
                params["pairs"], params["min_tf"], params["hist_bins"], params["seed"])
    hist = analysis.similarity_histogram(
        model, pair_count=params["pairs"], min_tf=params["min_tf"],
        bins=params["hist_bins"], seed=params["seed"])
    hist_path = out / "similarity_histogram.csv"
    analysis.write_histogram_csv(hist, hist_path)
    logger.info("wrote %s (mean similarity %.4f over %d pairs)",
                hist_path, hist.sample_mean, hist.sample_count)

    _, mean_len_all = analysis.mean_vector(model, min_tf=1)
    logger.info("mean vector length over all terms: %.4f", mean_len_all)
    try:
        _, mean_len_multi = analysis.mean_vector(model, min_tf=2)
        logger.info("mean vector length excluding tf=1 terms: %.4f", mean_len_multi)
    except ValueError:
        pass

    bins = analysis.bin_means(stats)
    bins_path = out / "bins.tsv"
    with bins_path.open("w", encoding="utf-8", newline="\n") as fh:
        for b in bins:
            fh.write("%d\t%d\t%d\t%d\t%s\n" % (b.k, b.lo, b.hi, b.member_count, repr(b.mean_v)))
    logger.info("wrote %s (%d bins)", bins_path, len(bins))

    plane_path = out / "plane.json"
    analysis.export_plane(stats, bins, plane_path, corpus_name=corpus_name,
                          dim=model.dim, total_tokens=total_tokens,
                          mean_vec_len=mean_len_all, min_tf=1)
    logger.info("wrote %s (%d word records)", plane_path, len(stats))

    if not args.no_figures:
        figures.plot_similarity_histogram(hist, out / "similarity_histogram.png")
        figures.plot_length_vs_frequency(stats, bins, mean_len_all,
                                         out / "length_vs_frequency.png")
        if lexicon is not None:
            figures.plot_class_overlay(stats, lexicon, "noun", "adjective",
                                       out / "nouns_vs_adjectives.png")
            figures.plot_class_overlay(stats, lexicon, "verb", "function",
                                       out / "verbs_vs_function_words.png")
            figures.plot_class_overlay(stats, lexicon, "proper-noun", "function",
                                       out / "proper_nouns_vs_function_words.png")
    return 0


def cmd_serve(args):
    server.serve(args.data, args.port, assets_dir=args.assets)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wordsig",
        description="Train word embeddings and rank corpus terms by vector length and frequency.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="tokenize a raw corpus and build its vocabulary")
    p.add_argument("corpus", help="id<TAB>text file, or a directory of plain-text documents")
    p.add_argument("-o", "--out", required=True, help="output directory")
    p.add_argument("--min-count", type=_positive_int, default=1,
                   help="drop terms rarer than this (default 1)")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("train", help="train skip-gram negative-sampling vectors")
    p.add_argument("tokens", help="tokenized corpus, one document per line")
    p.add_argument("-o", "--output", required=True, help="vector file to write")
    p.add_argument("--size", type=_positive_int, help="vector dimension (default 100)")
    p.add_argument("--window", type=_positive_int, help="maximum context offset (default 10)")
    p.add_argument("--negative", type=_nonnegative_int, help="negative samples per pair (default 5)")
    p.add_argument("--sample", type=float, help="subsampling threshold (default 1e-4)")
    p.add_argument("--iter", type=_positive_int, help="training passes (default 20)")
    p.add_argument("--min-count", type=_positive_int, help="vocabulary cutoff (default 1)")
    p.add_argument("--alpha", type=float, help="initial learning rate (default 0.025)")
    p.add_argument("--threads", type=_positive_int, help="worker threads (default 1)")
    p.add_argument("--seed", type=int, help="RNG seed (default 1)")
    p.add_argument("--exact-sigmoid", action="store_true",
                   help="use the exact sigmoid instead of the lookup table")
    p.add_argument("--track-loss", action="store_true",
                   help="log the mean pair objective per epoch")
    p.add_argument("--config", help="key=value defaults file (flags override)")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("stats", help="compute significance reports and the explorer data file")
    p.add_argument("vectors", help="vector file from `wordsig train`")
    p.add_argument("--vocab", required=True, help="term<TAB>count file from `wordsig ingest`")
    p.add_argument("-o", "--out", required=True, help="output directory")
    p.add_argument("--tags", help="token<TAB>tag file from an external POS tagger")
    p.add_argument("--min-tf", type=_positive_int,
                   help="minimum tf for histogram sampling (default 2)")
    p.add_argument("--pairs", type=_positive_int,
                   help="sampled pairs for the histogram (default 1000000)")
    p.add_argument("--hist-bins", type=_positive_int, help="histogram bins (default 100)")
    p.add_argument("--top", type=_positive_int, help="frequency list length (default 50)")
    p.add_argument("--seed", type=int, help="sampling seed (default 1)")
    p.add_argument("--corpus-name", help="name recorded in the data file meta")
    p.add_argument("--no-figures", action="store_true", help="skip figure rendering")
    p.add_argument("--config", help="key=value defaults file (flags override)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("serve", help="serve the explorer over HTTP")
    p.add_argument("data", help="explorer data file from `wordsig stats`")
    p.add_argument("--port", type=_nonnegative_int, default=8000)
    p.add_argument("--assets", help="directory with the built frontend (index.html, js)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None):
    logging.basicConfig(format="%(asctime)s : %(levelname)s : %(message)s",
                        level=logging.INFO, stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WordsigError as exc:
        logger.error("%s", exc)
        return 1
    except ValueError as exc:
        logger.error("%s", exc)
        return 1
    except OSError as exc:
        logger.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
