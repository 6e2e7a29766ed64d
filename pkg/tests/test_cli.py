import json
import subprocess
import sys

import numpy as np
import pytest

import gramflow.demo as demo
from gramflow import SpaceAssignment, load_lexicon, load_model, meaning, parse_type, reduce

DEMO_ARGS = ["--lexicon", demo.lexicon_path(), "--dims", "n:2,s:2"]


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "gramflow", *args], capture_output=True, text=True
    )


# ------------------------------------------------------------------- parse

def test_parse_grammatical_sentence():
    out = run_cli("parse", "Alice hates Bob", *DEMO_ARGS)
    assert out.returncode == 0
    assert "links (0,1) (3,4); through 2" in out.stdout
    assert "\\___/" in out.stdout


def test_parse_rejects_ungrammatical():
    out = run_cli("parse", "Alice hates", *DEMO_ARGS)
    assert out.returncode == 1
    assert "no reduction to s" in out.stdout


def test_parse_unknown_word_is_a_data_error():
    out = run_cli("parse", "Alice xyzzy Bob", *DEMO_ARGS)
    assert out.returncode == 2
    assert "xyzzy" in out.stderr


def test_parse_json_payload():
    out = run_cli("--json", "parse", "Alice hates Bob", *DEMO_ARGS)
    payload = json.loads(out.stdout)
    assert payload["grammatical"] is True
    assert payload["links"] == [[0, 1], [3, 4]]
    assert payload["through"] == [2]
    assert payload["types"] == ["n", "n^r s n^l", "n"]


# ----------------------------------------------------------------- meaning

def test_meaning_demo_verb_slice():
    out = run_cli("--json", "meaning", "Alice hates Bob", *DEMO_ARGS)
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert payload["vector"] == [1.0, 0.0]


def test_meaning_choi_verb():
    out = run_cli("--json", "meaning", "Alice dreams", *DEMO_ARGS)
    payload = json.loads(out.stdout)
    # the stored map is [[1,2],[3,4]], alice = e0, so the meaning is row 0
    assert payload["vector"] == [1.0, 2.0]


def test_meaning_rejects_ungrammatical_without_vector():
    out = run_cli("meaning", "hates Alice hates", *DEMO_ARGS)
    assert out.returncode == 1
    assert "meaning:" not in out.stdout


def test_meaning_json_round_trips_bitwise():
    out = run_cli("--json", "meaning", "Alice does not like Bob", *DEMO_ARGS)
    payload = json.loads(out.stdout)
    space = SpaceAssignment({"n": 2, "s": 2})
    lex = load_lexicon(demo.lexicon_path(), space)
    bound = [lex.bind(w) for w in ["alice", "does", "not", "like", "bob"]]
    seq = parse_type("")
    for w in bound:
        seq = seq + w.type
    expected = meaning(bound, reduce(seq, parse_type("s")), space)
    assert [float(x) for x in expected] == payload["vector"]


# ----------------------------------------------------------------- compare

def test_compare_word_order():
    out = run_cli("--json", "compare", "Alice hates Bob", "Bob hates Alice", *DEMO_ARGS)
    assert out.returncode == 0
    assert json.loads(out.stdout)["cosine"] < 0.999


def test_compare_sentence_with_itself():
    out = run_cli("--json", "compare", "Alice likes Bob", "Alice likes Bob", *DEMO_ARGS)
    assert json.loads(out.stdout)["cosine"] == pytest.approx(1.0, abs=1e-12)


def test_compare_negation_flips_coordinates():
    out = run_cli("--json", "compare", "Alice does not like Bob", "Alice likes Bob", *DEMO_ARGS)
    value = json.loads(out.stdout)["cosine"]
    # swap . [0.9, 0.1] against [0.9, 0.1]
    expected = np.dot([0.1, 0.9], [0.9, 0.1]) / np.dot([0.9, 0.1], [0.9, 0.1])
    assert value == pytest.approx(expected, abs=1e-12)


def test_compare_zero_meaning_is_a_data_error(tmp_path):
    (tmp_path / "zero.tns").write_text("2 2\n0 0\n0 0\n")
    (tmp_path / "alice.tns").write_text("2\n1 0\n")
    (tmp_path / "lex.tsv").write_text(
        "alice\tn\ttensor:alice.tns\nrests\tn^r s\ttensor:zero.tns\n"
    )
    out = run_cli("compare", "alice rests", "alice rests",
                  "--lexicon", str(tmp_path / "lex.tsv"), "--dims", "n:2,s:2")
    assert out.returncode == 2
    assert "zero" in out.stderr


# ------------------------------------------------------------- space build

def test_space_build_writes_model(tmp_path):
    out_path = tmp_path / "model.txt"
    out = run_cli("space", "build", demo.corpus_path(), "-k", "4", "--out", str(out_path))
    assert out.returncode == 0
    assert "basis size: 4" in out.stdout
    model = load_model(out_path)
    assert model.basis.words == ("alice", "bob", "hates", "likes")
    assert all(len(v) == 4 for v in model.vectors.values())


def test_space_build_shortfall_and_missing_file(tmp_path):
    out = run_cli("space", "build", demo.corpus_path(), "-k", "40",
                  "--out", str(tmp_path / "m.txt"))
    assert out.returncode == 2
    out = run_cli("space", "build", str(tmp_path / "nothing.txt"), "-k", "1",
                  "--out", str(tmp_path / "m.txt"))
    assert out.returncode == 2


def test_space_build_empty_corpus(tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("\n\n")
    out = run_cli("space", "build", str(empty), "-k", "1", "--out", str(tmp_path / "m.txt"))
    assert out.returncode == 2
    assert "empty" in out.stderr


def test_model_feeds_noun_dimension(tmp_path):
    model_path = tmp_path / "model.txt"
    run_cli("space", "build", demo.corpus_path(), "-k", "2", "--out", str(model_path))
    (tmp_path / "lex.tsv").write_text("alice\tn\tvector\nbob\tn\tvector\n")
    out = run_cli("--json", "parse", "alice", "--lexicon", str(tmp_path / "lex.tsv"),
                  "--model", str(model_path), "--dims", "s:2")
    assert out.returncode == 1  # a bare noun is not a sentence
    assert json.loads(out.stdout)["grammatical"] is False


# ------------------------------------------------------------------- snake

def test_demo_snake_passes():
    for d in ("1", "2", "64"):
        out = run_cli("demo", "snake", "-d", d)
        assert out.returncode == 0
        assert "PASS" in out.stdout


def test_demo_snake_dimension_bounds():
    assert run_cli("demo", "snake", "-d", "0").returncode == 2
    assert run_cli("demo", "snake", "-d", "65").returncode == 2


# ------------------------------------------------------------- determinism

def test_repeated_runs_are_identical():
    first = run_cli("--json", "meaning", "Alice does not like Bob", *DEMO_ARGS)
    second = run_cli("--json", "meaning", "Alice does not like Bob", *DEMO_ARGS)
    assert first.stdout == second.stdout
