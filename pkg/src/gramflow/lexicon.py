"""Binding words to types and tensors.

A lexicon file lists one entry per line: word, type notation, and a source
telling where the tensor comes from — a stored model vector, a tensor file,
a matrix file embedded as a bipartite verb state, or one of the constructed
"logical" words whose tensors are pure wire routing rather than corpus
statistics.  Entries are resolved and shape-checked eagerly at load time.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import ParseError, ShapeError, UnknownWordError
from .pregroup import PregroupType, parse_type
from .semantics import WordMeaning, choi_embed
from .tensors import SpaceAssignment, read_tensor, shape_of

__all__ = [
    "LexEntry",
    "Lexicon",
    "load_lexicon",
    "make_logical_does",
    "make_logical_not",
    "LOGICAL_TYPE",
]

# subject wire in, sentence wire out, and the two wires that splice into the
# following verb phrase: the shared type of the constructed function words
LOGICAL_TYPE = "n^r s s^l n"


@dataclass(frozen=True)
class LexEntry:
    """One lexicon line: a word, its type, and its tensor source spec."""

    word: str
    type: PregroupType
    source: str


class Lexicon:
    """Immutable word-to-meaning table over a fixed space assignment."""

    def __init__(self, entries, space: SpaceAssignment, tensors):
        self.entries = dict(entries)
        self.space = space
        self._tensors = dict(tensors)

    def words(self):
        return sorted(self.entries)

    def bind(self, word: str) -> WordMeaning:
        """Resolve a word to its meaning; repeated calls return the same value."""
        if word not in self.entries:
            raise UnknownWordError(f"word {word!r} is not in the lexicon")
        entry = self.entries[word]
        return WordMeaning(word, entry.type, self._tensors[word])


def make_logical_does(space: SpaceAssignment) -> WordMeaning:
    """The do-support auxiliary as pure wire routing.

    Type n^r s s^l n; the tensor passes the subject straight through to the
    verb and the verb's sentence wire straight out:
    D[i, a, b, j] = delta_ij * delta_ab.  Composed with any verb phrase it
    leaves the sentence meaning unchanged.
    """
    dn, ds = space.dim("n"), space.dim("s")
    tensor = np.einsum("ij,ab->iabj", np.eye(dn), np.eye(ds))
    return WordMeaning("does", parse_type(LOGICAL_TYPE), tensor)


def make_logical_not(space: SpaceAssignment, negation) -> WordMeaning:
    """Negation as wire routing with a matrix spliced into the sentence wire.

    Type n^r s s^l n; the subject passes through while the sentence wire
    coming back from the verb is acted on by ``negation`` before flowing
    out: N[i, a, b, j] = delta_ij * negation[a, b], so the meaning of
    "subject does not verb-phrase" is ``negation`` applied to the meaning
    of "subject verb-phrase", and chained negations compose their matrices.
    """
    dn, ds = space.dim("n"), space.dim("s")
    mat = np.asarray(negation, dtype=float)
    if mat.shape != (ds, ds):
        raise ShapeError(
            f"negation matrix must be {ds}x{ds} on the sentence space, "
            f"got shape {list(mat.shape)}"
        )
    tensor = np.einsum("ij,ab->iabj", np.eye(dn), mat)
    return WordMeaning("not", parse_type(LOGICAL_TYPE), tensor)


def _resolve(entry: LexEntry, space, model, base_dir):
    src = entry.source

    def resolve_path(rel):
        path = os.path.join(base_dir, rel) if base_dir else rel
        if not os.path.exists(path):
            raise ParseError(f"entry {entry.word!r}: referenced file {path!r} does not exist")
        return path

    if src == "vector":
        if model is None:
            raise ParseError(f"entry {entry.word!r} needs a vector model, none was given")
        if entry.word not in model.vectors:
            raise UnknownWordError(f"entry {entry.word!r} is not in the vector model")
        return np.asarray(model.vectors[entry.word], dtype=float)
    if src.startswith("tensor:"):
        return read_tensor(resolve_path(src[len("tensor:"):]))
    if src.startswith("choi:"):
        return choi_embed(read_tensor(resolve_path(src[len("choi:"):])))
    if src == "logical:does":
        return make_logical_does(space).tensor
    if src.startswith("logical:not:"):
        return make_logical_not(space, read_tensor(resolve_path(src[len("logical:not:"):]))).tensor
    raise ParseError(f"entry {entry.word!r}: unknown source spec {src!r}")


def load_lexicon(path, space: SpaceAssignment, model=None) -> Lexicon:
    """Parse and fully validate a lexicon file.

    Every entry is resolved to a concrete tensor immediately and checked
    against the shape its type requires, so shape errors surface here and
    not in the middle of a contraction.  Relative file references are
    resolved against the lexicon file's directory.
    """
    base_dir = os.path.dirname(os.path.abspath(path))
    entries, tensors = {}, {}
    with open(path, "r", encoding="utf-8") as fh:
        for ln, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise ParseError(f"{path}:{ln}: expected 3 tab-separated fields, got {len(fields)}")
            word, type_text, source = (f.strip() for f in fields)
            if word in entries:
                raise ParseError(f"{path}:{ln}: duplicate entry for {word!r}")
            try:
                ptype = parse_type(type_text)
            except ParseError as exc:
                raise ParseError(f"{path}:{ln}: {exc}") from None
            entry = LexEntry(word, ptype, source)
            tensor = _resolve(entry, space, model, base_dir)
            expected = shape_of(ptype, space)
            if tuple(tensor.shape) != expected:
                raise ShapeError(
                    f"{path}:{ln}: word {word!r} has tensor shape "
                    f"{list(tensor.shape)} but type {type_text!r} requires {list(expected)}"
                )
            entries[word] = entry
            tensors[word] = tensor
    return Lexicon(entries, space, tensors)
