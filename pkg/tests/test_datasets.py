"""Benchmark file loaders and their failure modes."""

import pytest

from halfsib.datasets import (
    LabeledCorpus,
    SentencePairDataset,
    WordPairDataset,
    dataset_name,
    load_labeled_corpus,
    load_sentence_pairs,
    load_word_pairs,
)
from halfsib.errors import DegenerateInput, EmptyInput, IoFailure


def test_dataset_name_strips_dir_and_extension():
    assert dataset_name("/a/b/rg65.tsv") == "rg65"
    assert dataset_name("men.txt") == "men"
    assert dataset_name("/x/no_ext") == "no_ext"
    assert dataset_name("archive.tar.gz") == "archive.tar"


class TestWordPairs:
    def test_load(self, write_lines):
        path = write_lines(
            "ws.tsv",
            ["# header comment", "cat\tdog\t7.5", "", "king\tqueen\t8"],
        )
        ds = load_word_pairs(path)
        assert ds.name == "ws"
        assert ds.items == (("cat", "dog", 7.5), ("king", "queen", 8.0))

    def test_explicit_name_wins(self, write_lines):
        path = write_lines("x.tsv", ["a\tb\t1"])
        assert load_word_pairs(path, name="custom").name == "custom"

    def test_wrong_field_count(self, write_lines):
        path = write_lines("bad.tsv", ["cat\tdog"])
        with pytest.raises(IoFailure, match="bad.tsv:1"):
            load_word_pairs(path)

    def test_bad_score(self, write_lines):
        path = write_lines("bad.tsv", ["cat\tdog\thigh"])
        with pytest.raises(IoFailure, match="not a number"):
            load_word_pairs(path)

    def test_non_finite_score(self, write_lines):
        path = write_lines("bad.tsv", ["cat\tdog\tinf"])
        with pytest.raises(IoFailure, match="non-finite"):
            load_word_pairs(path)

    def test_empty_word(self, write_lines):
        path = write_lines("bad.tsv", ["cat\t\t3.0"])
        with pytest.raises(IoFailure, match="empty word"):
            load_word_pairs(path)

    def test_empty_file(self, write_lines):
        path = write_lines("empty.tsv", ["# only a comment"])
        with pytest.raises(EmptyInput):
            load_word_pairs(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(IoFailure):
            load_word_pairs(str(tmp_path / "absent.tsv"))

    def test_container_rejects_non_finite(self):
        with pytest.raises(DegenerateInput):
            WordPairDataset((("a", "b", float("nan")),), "x")
        with pytest.raises(EmptyInput):
            WordPairDataset((), "x")


class TestSentencePairs:
    def test_load_keeps_spaces_inside_sentences(self, write_lines):
        path = write_lines(
            "sts.tsv",
            ["a man is walking\ta person walks\t4.2", "dog runs\tcat sits\t0.5"],
        )
        ds = load_sentence_pairs(path)
        assert ds.items[0] == ("a man is walking", "a person walks", 4.2)
        assert len(ds.items) == 2

    def test_wrong_field_count(self, write_lines):
        path = write_lines("bad.tsv", ["one\ttwo\tthree\t4.0"])
        with pytest.raises(IoFailure, match="expected 3"):
            load_sentence_pairs(path)

    def test_container_validation(self):
        with pytest.raises(EmptyInput):
            SentencePairDataset((), "x")


class TestLabeledCorpus:
    def test_load(self, write_lines):
        path = write_lines("sent.tsv", ["1\tgreat movie", "0\tterrible film"])
        corpus = load_labeled_corpus(path)
        assert corpus.items == (("great movie", 1), ("terrible film", 0))

    def test_label_must_be_binary_token(self, write_lines):
        path = write_lines("bad.tsv", ["2\ttext"])
        with pytest.raises(IoFailure, match="label must be 0 or 1"):
            load_labeled_corpus(path)
        path = write_lines("bad2.tsv", ["pos\ttext"])
        with pytest.raises(IoFailure):
            load_labeled_corpus(path)

    def test_wrong_field_count(self, write_lines):
        path = write_lines("bad.tsv", ["1\ttext\textra"])
        with pytest.raises(IoFailure, match="expected 2"):
            load_labeled_corpus(path)

    def test_single_class_rejected(self, write_lines):
        path = write_lines("bad.tsv", ["1\ta", "1\tb"])
        with pytest.raises(DegenerateInput, match="single class"):
            load_labeled_corpus(path)

    def test_container_rejects_out_of_range_labels(self):
        with pytest.raises(DegenerateInput):
            LabeledCorpus((("a", 3), ("b", 0)), "x")
