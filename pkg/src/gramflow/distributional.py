"""Co-occurrence word vectors built from a plain-text corpus.

A word's meaning vector lists, for each chosen basis word, the number of
times the word occurs within a fixed window of that basis word, divided by
the word's total occurrence count.  Windows are symmetric, measured in
token positions, and never cross document boundaries.  Everything is
deterministic: document order never affects the output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from collections import Counter

import numpy as np

from .errors import CorpusError, DegenerateVectorError, ParseError, UnknownWordError
from .semantics import cosine

__all__ = [
    "BasisSpec",
    "VectorSpaceModel",
    "tokenize",
    "documents_from_text",
    "load_corpus",
    "build_basis",
    "meaning_vector",
    "build_model",
    "similarity",
    "save_model",
    "load_model",
]

_WORD = re.compile(r"[^\W_]+", re.UNICODE)

DEFAULT_WINDOW = 2


def tokenize(text: str) -> list[str]:
    """Lowercase and split on maximal runs of non-alphanumeric characters."""
    return _WORD.findall(text.lower())


def documents_from_text(text: str) -> list[list[str]]:
    """Split text into documents on blank lines and tokenize each."""
    docs = [tokenize(chunk) for chunk in re.split(r"\n\s*\n", text)]
    return [doc for doc in docs if doc]


def load_corpus(paths) -> list[list[str]]:
    """Read one or more UTF-8 files, each holding blank-line separated documents."""
    corpus = []
    for path in paths:
        with open(path, "r", encoding="utf-8") as fh:
            corpus.extend(documents_from_text(fh.read()))
    return corpus


@dataclass(frozen=True)
class BasisSpec:
    """The ordered context words spanning the space, plus the window width."""

    words: tuple[str, ...]
    window: int = DEFAULT_WINDOW

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        if len(set(self.words)) != len(self.words):
            raise ValueError("basis words must be distinct")
        if self.window < 1:
            raise ValueError(f"window must be >= 1, got {self.window}")


@dataclass
class VectorSpaceModel:
    """Meaning vectors for every corpus word against a fixed basis."""

    basis: BasisSpec
    vectors: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)


def build_basis(corpus, k: int, stop=None) -> BasisSpec:
    """Choose the k most frequent tokens (ties lexicographic) as the basis."""
    if k < 1:
        raise ValueError(f"basis size must be >= 1, got {k}")
    stop = set(stop or ())
    freq = Counter()
    for doc in corpus:
        freq.update(tok for tok in doc if tok not in stop)
    if len(freq) < k:
        raise CorpusError(f"need {k} distinct eligible tokens, corpus has {len(freq)}")
    ranked = sorted(freq.items(), key=lambda item: (-item[1], item[0]))
    return BasisSpec(tuple(tok for tok, _ in ranked[:k]))


def _pair_counts(corpus, basis: BasisSpec):
    """Raw in-window pair counts per word, and per-word occurrence counts.

    A basis word occurring twice inside one window is counted twice; the
    target position itself never counts, so a word co-occurring with its own
    basis coordinate only counts distinct occurrences.
    """
    index = {tok: m for m, tok in enumerate(basis.words)}
    window = basis.window
    pair = {}
    occ = Counter()
    for doc in corpus:
        n = len(doc)
        for p, tok in enumerate(doc):
            occ[tok] += 1
            row = pair.get(tok)
            if row is None:
                row = pair[tok] = [0] * len(basis.words)
            for q in range(max(0, p - window), min(n, p + window + 1)):
                if q == p:
                    continue
                m = index.get(doc[q])
                if m is not None:
                    row[m] += 1
    return pair, occ


def meaning_vector(corpus, word: str, basis: BasisSpec) -> np.ndarray:
    """Relative co-occurrence frequencies of ``word`` against the basis."""
    pair, occ = _pair_counts(corpus, basis)
    if word not in occ:
        raise UnknownWordError(f"word {word!r} does not occur in the corpus")
    return np.array(pair[word], dtype=float) / occ[word]


def build_model(corpus, basis: BasisSpec) -> VectorSpaceModel:
    """Meaning vectors for the whole vocabulary in one pass."""
    pair, occ = _pair_counts(corpus, basis)
    vectors = {
        tok: np.array(row, dtype=float) / occ[tok] for tok, row in pair.items()
    }
    return VectorSpaceModel(basis, vectors, dict(occ))


def similarity(model: VectorSpaceModel, w1: str, w2: str) -> float:
    """Cosine between two stored meaning vectors.

    Coordinate-identical vectors (a word with itself, or exact synonyms by
    construction) are exactly parallel, so that case returns 1.0 without
    going through the rounding of an explicit norm computation.
    """
    for w in (w1, w2):
        if w not in model.vectors:
            raise UnknownWordError(f"word {w!r} is not in the model")
        if not np.any(model.vectors[w]):
            raise DegenerateVectorError(f"word {w!r} has a zero meaning vector")
    if np.array_equal(model.vectors[w1], model.vectors[w2]):
        return 1.0
    return cosine(model.vectors[w1], model.vectors[w2])


def save_model(model: VectorSpaceModel, path) -> None:
    """Write the model file: basis header, then one line per word.

    Word lines are sorted by token and hold the token, its occurrence
    count, and the vector coordinates; floats round-trip bit-exactly.
    """
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("#basis " + " ".join(model.basis.words) + "\n")
        for tok in sorted(model.vectors):
            coords = " ".join(repr(float(x)) for x in model.vectors[tok])
            fh.write(f"{tok} {model.counts[tok]} {coords}\n")


def load_model(path) -> VectorSpaceModel:
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].startswith("#basis"):
        raise ParseError(f"{path}: missing '#basis' header line")
    basis = BasisSpec(tuple(lines[0].split()[1:]))
    vectors, counts = {}, {}
    for ln, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 2 + len(basis.words):
            raise ParseError(f"{path}:{ln}: expected {2 + len(basis.words)} fields, got {len(fields)}")
        tok = fields[0]
        try:
            counts[tok] = int(fields[1])
            vectors[tok] = np.array([float(x) for x in fields[2:]])
        except ValueError:
            raise ParseError(f"{path}:{ln}: bad number") from None
    return VectorSpaceModel(basis, vectors, counts)
