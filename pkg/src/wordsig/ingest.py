"""Corpus ingestion: TeX stripping, tokenization and vocabulary building.

Documents are short title+abstract records.  The pipeline is
``strip_tex`` -> ``normalize_tokenize`` -> ``build_vocabulary``; every
stage is a pure function so documents can be processed independently.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import CorpusError

logger = logging.getLogger(__name__)

# Math-like environments whose body is dropped wholesale.
_MATH_ENVS = ("equation", "align", "eqnarray", "displaymath", "math", "gather", "multline")

# Commands whose first brace group is a label/key, not prose.
_DROP_ARG_COMMANDS = frozenset({
    "begin", "end", "label", "ref", "eqref", "pageref", "cite", "citep", "citet",
    "bibliography", "bibliographystyle", "input", "include", "usepackage",
    "documentclass", "includegraphics", "vspace", "hspace", "url",
})


@dataclass(frozen=True)
class RawDocument:
    """One corpus record: an opaque id plus raw (possibly TeX-marked) text."""

    id: str
    text: str


@dataclass
class TokenizedCorpus:
    """Ordered token sequences per document."""

    documents: list = field(default_factory=list)

    @property
    def total_tokens(self):
        return sum(len(doc) for doc in self.documents)

    def __len__(self):
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)


class Vocabulary:
    """Term -> (dense index, raw count), indices in descending count order.

    Ties in count are broken lexicographically so that index assignment
    is deterministic for a given corpus.
    """

    def __init__(self, counts):
        ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
        self.words = [term for term, _ in ordered]
        self.counts = [count for _, count in ordered]
        self.index = {term: i for i, term in enumerate(self.words)}

    @classmethod
    def from_items(cls, pairs):
        """Build a vocabulary preserving the given (term, count) order."""
        vocab = cls({})
        for term, count in pairs:
            if term in vocab.index:
                raise ValueError("duplicate term %r" % (term,))
            vocab.index[term] = len(vocab.words)
            vocab.words.append(term)
            vocab.counts.append(count)
        return vocab

    def __len__(self):
        return len(self.words)

    def __contains__(self, term):
        return term in self.index

    def count(self, term):
        return self.counts[self.index[term]]

    def items(self):
        return zip(self.words, self.counts)

    def set_counts(self, mapping):
        """Replace counts from ``mapping``, which must cover exactly this term set."""
        for term in self.words:
            if term not in mapping:
                raise ValueError("term %r has no count in the supplied vocabulary" % (term,))
        for term in mapping:
            if term not in self.index:
                raise ValueError("term %r is not part of this vocabulary" % (term,))
        self.counts = [mapping[term] for term in self.words]


def _skip_brace_group(text, i):
    """Return the position just past the brace group starting at ``i``.

    ``text[i]`` must be '{'.  Unbalanced groups run to end of text.
    """
    depth = 0
    n = len(text)
    while i < n:
        if text[i] == "{":
            depth += 1
        elif text[i] == "}":
            depth -= 1
            if depth == 0:
                return i + 1
        i += 1
    return n


def _drop_to_eol(text, i):
    j = text.find("\n", i)
    return len(text) if j < 0 else j


def strip_tex(text):
    """Remove TeX markup, returning plain text with words preserved in order.

    Comments run to end of line, ``$...$``/``$$...$$`` spans and math
    environments are dropped, commands are removed while the text of
    their brace arguments is kept (except for label-like commands whose
    argument is a key).  Unbalanced math delimiters degrade to dropping
    through end of line.  Lossy and best-effort by design.
    """
    out = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\\":
            nxt = text[i + 1] if i + 1 < n else ""
            if nxt.isalpha():
                j = i + 1
                while j < n and text[j].isalpha():
                    j += 1
                name = text[i + 1:j]
                if j < n and text[j] == "*":
                    j += 1
                while j < n and text[j] == "[":  # optional arguments
                    k = text.find("]", j + 1)
                    if k < 0:
                        break
                    j = k + 1
                if name == "begin":
                    env = _match_env(text, j)
                    if env in _MATH_ENVS:
                        i = _skip_env(text, j, env)
                        continue
                if name in _DROP_ARG_COMMANDS:
                    while j < n and text[j].isspace():
                        j += 1
                    if j < n and text[j] == "{":
                        j = _skip_brace_group(text, j)
                i = j
            elif nxt == "\\":
                out.append(" ")  # forced line break
                i += 2
            elif nxt == "(":
                end = text.find("\\)", i + 2)
                i = _drop_to_eol(text, i) if end < 0 else end + 2
            elif nxt == "[":
                end = text.find("\\]", i + 2)
                i = _drop_to_eol(text, i) if end < 0 else end + 2
            else:
                # escaped special (\% \$ \& \_ ...) contributes the bare symbol
                if nxt:
                    out.append(nxt)
                i += 2
        elif c == "%":
            i = _drop_to_eol(text, i)
        elif c == "$":
            if text.startswith("$$", i):
                end = text.find("$$", i + 2)
                i = _drop_to_eol(text, i) if end < 0 else end + 2
            else:
                end = text.find("$", i + 1)
                i = _drop_to_eol(text, i) if end < 0 else end + 1
        elif c in "{}":
            i += 1
        elif c == "~":
            out.append(" ")
            i += 1
        else:
            out.append(c)
            i += 1
    return "".join(out)


def _match_env(text, i):
    """Environment name if ``text[i:]`` starts with ``{name}``, else None."""
    n = len(text)
    while i < n and text[i].isspace():
        i += 1
    if i >= n or text[i] != "{":
        return None
    j = text.find("}", i + 1)
    if j < 0:
        return None
    return text[i + 1:j].strip().rstrip("*")


def _skip_env(text, i, env):
    """Skip past the matching ``\\end{env}``; unbalanced drops to end of line."""
    marker = "\\end{" + env
    j = text.find(marker, i)
    if j < 0:
        j = text.find(marker + "*", i)
    if j < 0:
        return _drop_to_eol(text, i)
    k = text.find("}", j)
    return len(text) if k < 0 else k + 1


def normalize_tokenize(text):
    """Lowercase and split into tokens, isolating every punctuation mark.

    Alphanumeric runs form word tokens; any other non-space character is
    emitted as a standalone single-character token, so hyphenated words
    split into their parts plus a "-" token.  Digits are kept verbatim.
    """
    tokens = []
    word = []
    for ch in text.lower():
        if ch.isalnum():
            word.append(ch)
        else:
            if word:
                tokens.append("".join(word))
                word = []
            if not ch.isspace():
                tokens.append(ch)
    if word:
        tokens.append("".join(word))
    return tokens


def build_vocabulary(corpus, min_count=1):
    """Count token types across ``corpus`` and keep those with count >= min_count."""
    if min_count < 1:
        raise ValueError("min_count must be >= 1, got %r" % (min_count,))
    if len(corpus) == 0:
        raise CorpusError("cannot build a vocabulary from an empty corpus")
    counts = Counter()
    for doc in corpus:
        counts.update(doc)
    if min_count > 1:
        counts = {t: c for t, c in counts.items() if c >= min_count}
    return Vocabulary(counts)


def load_stopwords():
    """The fixed English stop-word list shipped with the package."""
    data = resources.files("wordsig").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(line.strip() for line in data.splitlines() if line.strip())


def is_punctuation(token):
    return len(token) > 0 and not any(ch.isalnum() for ch in token)


def term_frequency_list(vocab, stopwords=None, exclude_punct=True, top_n=None):
    """Terms ranked by descending frequency, ties broken lexicographically.

    Stop words and bare punctuation tokens are dropped when the
    corresponding filters are supplied/set.  ``top_n`` larger than the
    filtered list returns the full list.
    """
    pairs = []
    for term, count in vocab.items():
        if stopwords is not None and term in stopwords:
            continue
        if exclude_punct and is_punctuation(term):
            continue
        pairs.append((term, count))
    pairs.sort(key=lambda kv: (-kv[1], kv[0]))
    if top_n is not None:
        pairs = pairs[:max(top_n, 0)]
    return pairs


def iter_documents(path):
    """Yield RawDocuments from a TSV file (``id<TAB>text`` lines) or a directory.

    A directory is read as one plain-text document per file, in sorted
    filename order; the file stem is the document id.
    """
    path = Path(path)
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.is_file())
        if not files:
            raise CorpusError("no documents found in %s" % path)
        for p in files:
            yield RawDocument(id=p.stem, text=p.read_text("utf-8"))
    elif path.is_file():
        seen = set()
        with path.open("r", encoding="utf-8") as fh:
            empty = True
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n").rstrip("\r")
                if not line:
                    continue
                doc_id, sep, text = line.partition("\t")
                if not sep:
                    raise CorpusError(
                        "line %d: expected id<TAB>text record in %s" % (lineno, path))
                if doc_id in seen:
                    raise CorpusError(
                        "line %d: duplicate document id %r" % (lineno, doc_id))
                seen.add(doc_id)
                empty = False
                yield RawDocument(id=doc_id, text=text)
            if empty:
                raise CorpusError("no documents found in %s" % path)
    else:
        raise CorpusError("corpus path does not exist: %s" % path)


def tokenize_documents(documents):
    """Run the full preprocessing pipeline over RawDocuments.

    Returns (ids, TokenizedCorpus); document order is preserved.
    """
    ids = []
    docs = []
    for doc in documents:
        ids.append(doc.id)
        docs.append(normalize_tokenize(strip_tex(doc.text)))
    return ids, TokenizedCorpus(docs)


def write_tokens(corpus, path):
    """One document per line, tokens whitespace-joined."""
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        for doc in corpus:
            fh.write(" ".join(doc))
            fh.write("\n")


def read_tokens(path):
    path = Path(path)
    if not path.is_file():
        raise CorpusError("token file does not exist: %s" % path)
    docs = []
    with path.open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n").rstrip("\r")
            docs.append(line.split(" ") if line else [])
    return TokenizedCorpus(docs)


def write_vocab(vocab, path):
    """``term<TAB>count`` lines in descending count order."""
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        for term, count in vocab.items():
            fh.write("%s\t%d\n" % (term, count))


def read_vocab(path):
    """Parse a ``term<TAB>count`` file into a term -> count dict."""
    path = Path(path)
    if not path.is_file():
        raise CorpusError("vocabulary file does not exist: %s" % path)
    counts = {}
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line:
                continue
            term, sep, count = line.partition("\t")
            if not sep:
                raise CorpusError("line %d: expected term<TAB>count in %s" % (lineno, path))
            try:
                counts[term] = int(count)
            except ValueError:
                raise CorpusError("line %d: non-integer count %r in %s" % (lineno, count, path))
    return counts
