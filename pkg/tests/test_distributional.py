import random

import numpy as np
import pytest

from gramflow import (
    BasisSpec,
    CorpusError,
    DegenerateVectorError,
    ParseError,
    UnknownWordError,
    build_basis,
    build_model,
    load_model,
    meaning_vector,
    save_model,
    similarity,
    tokenize,
)
from gramflow.distributional import documents_from_text, load_corpus


def test_tokenize_examples():
    assert tokenize("Alice hates Bob.") == ["alice", "hates", "bob"]
    assert tokenize("don't") == ["don", "t"]
    assert tokenize("") == []
    assert tokenize("__under_score__") == ["under", "score"]


def test_documents_split_on_blank_lines():
    docs = documents_from_text("Alice hates Bob.\n\nBob dreams.\n\n\n")
    assert docs == [["alice", "hates", "bob"], ["bob", "dreams"]]


def test_load_corpus_multiple_files(tmp_path):
    (tmp_path / "a.txt").write_text("one two\n\nthree")
    (tmp_path / "b.txt").write_text("four")
    corpus = load_corpus([tmp_path / "a.txt", tmp_path / "b.txt"])
    assert corpus == [["one", "two"], ["three"], ["four"]]


def test_build_basis_examples():
    assert build_basis([["a", "b", "a"]], 1).words == ("a",)
    assert build_basis([["a", "b"], ["b", "c"]], 2).words == ("b", "a")
    with pytest.raises(CorpusError, match="3"):
        build_basis([["a", "b", "c"]], 5)


def test_build_basis_stop_words_and_window_default():
    basis = build_basis([["x", "x", "y", "z"]], 2, stop={"x"})
    assert basis.words == ("y", "z")
    assert basis.window == 2


def test_basis_spec_validation():
    with pytest.raises(ValueError):
        BasisSpec(("a", "a"))
    with pytest.raises(ValueError):
        BasisSpec(("a",), window=0)


def test_meaning_vector_examples():
    corpus = [["alice", "hates", "bob"]]
    basis = BasisSpec(("hates", "bob"), window=2)
    assert list(meaning_vector(corpus, "alice", basis)) == [1.0, 1.0]

    assert list(meaning_vector(corpus, "alice", BasisSpec(("alice",), window=2))) == [0.0]

    far = [["alice", "x", "x", "x", "bob"]]
    assert list(meaning_vector(far, "alice", BasisSpec(("bob",), window=2))) == [0.0]


def test_meaning_vector_unknown_word():
    with pytest.raises(UnknownWordError, match="'carol'"):
        meaning_vector([["alice"]], "carol", BasisSpec(("alice",)))


def test_meaning_vector_agrees_with_bulk_model():
    rng = random.Random(5)
    vocab = list("abcdefg")
    corpus = [[rng.choice(vocab) for _ in range(rng.randrange(1, 12))] for _ in range(15)]
    basis = build_basis(corpus, 4)
    model = build_model(corpus, basis)
    for word in model.vectors:
        assert np.array_equal(model.vectors[word], meaning_vector(corpus, word, basis))


def test_entries_bounded_by_window():
    rng = random.Random(9)
    vocab = list("abc")
    for window in (1, 2, 3):
        corpus = [[rng.choice(vocab) for _ in range(rng.randrange(1, 20))] for _ in range(10)]
        basis = BasisSpec(tuple(vocab), window=window)
        model = build_model(corpus, basis)
        for vec in model.vectors.values():
            assert np.all(vec >= 0.0)
            assert np.all(vec <= 2 * window)


def test_document_permutation_invariance():
    rng = random.Random(11)
    vocab = list("abcde")
    corpus = [[rng.choice(vocab) for _ in range(rng.randrange(1, 9))] for _ in range(12)]
    shuffled = list(corpus)
    rng.shuffle(shuffled)
    basis = BasisSpec(("a", "b", "c"))
    m1, m2 = build_model(corpus, basis), build_model(shuffled, basis)
    assert m1.counts == m2.counts
    assert set(m1.vectors) == set(m2.vectors)
    for word in m1.vectors:
        assert np.array_equal(m1.vectors[word], m2.vectors[word])


def test_concatenation_order_invariance():
    c1 = [["a", "b"], ["b", "c", "a"]]
    c2 = [["c", "c", "b"]]
    basis = BasisSpec(("a", "b", "c"))
    m12, m21 = build_model(c1 + c2, basis), build_model(c2 + c1, basis)
    for word in m12.vectors:
        assert np.array_equal(m12.vectors[word], m21.vectors[word])


def duplicate_with_twin(corpus, w1, w2):
    out = list(corpus)
    for doc in corpus:
        if w1 in doc:
            out.append([w2 if tok == w1 else tok for tok in doc])
    return out


def test_exact_synonym_construction():
    rng = random.Random(13)
    vocab = ["alice", "bob", "sees", "likes", "park"]
    corpus = [[rng.choice(vocab) for _ in range(rng.randrange(2, 8))] for _ in range(10)]
    assert any("alice" in doc for doc in corpus)
    twinned = duplicate_with_twin(corpus, "alice", "alys")
    basis = build_basis(twinned, 4)
    model = build_model(twinned, basis)
    assert np.array_equal(model.vectors["alice"], model.vectors["alys"])
    assert similarity(model, "alice", "alys") == 1.0


def test_similarity_examples():
    corpus = [["a", "x", "b"], ["a", "y", "b"]]
    model = build_model(corpus, BasisSpec(("a", "b"), window=1))
    # x and y sit in identical contexts
    assert similarity(model, "x", "y") == pytest.approx(1.0, abs=1e-12)
    assert similarity(model, "x", "x") == 1.0
    # disjoint contexts are orthogonal
    disjoint = build_model([["a", "x"], ["b", "y"]], BasisSpec(("a", "b"), window=1))
    assert similarity(disjoint, "x", "y") == 0.0


def test_similarity_error_cases():
    model = build_model([["a", "b", "c", "far", "x"]], BasisSpec(("b",), window=1))
    with pytest.raises(UnknownWordError):
        similarity(model, "a", "zzz")
    # "far" never sits next to "b", so its vector is all zero
    with pytest.raises(DegenerateVectorError):
        similarity(model, "a", "far")


def test_model_file_round_trip_bitwise(tmp_path):
    rng = random.Random(17)
    vocab = list("pqrstu")
    corpus = [[rng.choice(vocab) for _ in range(rng.randrange(1, 10))] for _ in range(8)]
    basis = build_basis(corpus, 3)
    model = build_model(corpus, basis)
    path = tmp_path / "model.txt"
    save_model(model, path)
    back = load_model(path)
    assert back.basis.words == model.basis.words
    assert back.counts == model.counts
    for word in model.vectors:
        assert np.array_equal(back.vectors[word], model.vectors[word])
    # writing the loaded model reproduces the file byte for byte
    path2 = tmp_path / "model2.txt"
    save_model(back, path2)
    assert path.read_bytes() == path2.read_bytes()


def test_model_file_parse_errors(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("no header\n")
    with pytest.raises(ParseError, match="#basis"):
        load_model(path)
    path.write_text("#basis a b\nword 1 0.5\n")
    with pytest.raises(ParseError, match="fields"):
        load_model(path)
    path.write_text("#basis a\nword one 0.5\n")
    with pytest.raises(ParseError, match="bad number"):
        load_model(path)
