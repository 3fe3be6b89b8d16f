"""Corpus significance toolkit.

Trains skip-gram negative-sampling word embeddings over a corpus of
short documents, then uses word-vector length together with term
frequency as a measure of term significance, and exports the v-tf plane
for interactive exploration.
"""

from .analysis import (
    BinSummary,
    PosLexicon,
    SimilarityHistogram,
    WordStat,
    assign_majority_tag,
    bin_index,
    bin_means,
    bin_range,
    classify_word_class,
    cosine_similarity,
    export_plane,
    load_plane,
    load_tagged_tokens,
    mean_vector,
    similarity_histogram,
    top_by_length_in_bin,
    vector_length,
    word_stats,
)
from .errors import (
    CorpusError,
    DataFileError,
    MemoryLimitError,
    TaggedTokenError,
    TrainingDivergedError,
    VectorFormatError,
    WordsigError,
)
from .ingest import (
    RawDocument,
    TokenizedCorpus,
    Vocabulary,
    build_vocabulary,
    iter_documents,
    load_stopwords,
    normalize_tokenize,
    read_tokens,
    read_vocab,
    strip_tex,
    term_frequency_list,
    tokenize_documents,
    write_tokens,
    write_vocab,
)
from .trainer import (
    EmbeddingModel,
    NoiseTable,
    TrainConfig,
    build_noise_table,
    load_vectors,
    save_vectors,
    sgns_step,
    subsample_keep_prob,
    train,
)

__version__ = "0.1.0"
