"""Bundled demo data: a tiny Alice/Bob lexicon and a toy corpus.

The lexicon uses a 2-dimensional noun space (alice = e0, bob = e1) and a
2-dimensional sentence space, so every worked example is hand-checkable.
"""

import os

_HERE = os.path.dirname(os.path.abspath(__file__))


def directory() -> str:
    return _HERE


def lexicon_path() -> str:
    return os.path.join(_HERE, "lexicon.tsv")


def corpus_path() -> str:
    return os.path.join(_HERE, "corpus.txt")
