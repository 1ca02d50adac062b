"""Dataset and prediction TSV round trips and malformed-input handling."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from tweetsift.dataio import (
    read_dataset,
    read_predictions,
    write_dataset,
    write_predictions,
)
from tweetsift.errors import DatasetFormatError
from tweetsift.normalize import Label, Tweet

INFO, UNINF = Label.INFORMATIVE, Label.UNINFORMATIVE


class TestReadDataset:
    def test_labeled_rows(self, tmp_path):
        path = tmp_path / "data.tsv"
        path.write_text(
            "t1\tCases rising in 3 regions\tINFORMATIVE\n"
            "t2\tmiss my friends\tUNINFORMATIVE\n",
            "utf-8",
        )
        tweets = read_dataset(path)
        assert [t.id for t in tweets] == ["t1", "t2"]
        assert tweets[0].label is INFO
        assert tweets[1].text == "miss my friends"

    def test_header_row_skipped(self, tmp_path):
        path = tmp_path / "data.tsv"
        path.write_text("Id\tText\tLabel\nt1\thello\tINFORMATIVE\n", "utf-8")
        assert [t.id for t in read_dataset(path)] == ["t1"]

    def test_unlabeled_rows(self, tmp_path):
        path = tmp_path / "data.tsv"
        path.write_text("t1\tsome text\n", "utf-8")
        assert read_dataset(path)[0].label is None

    def test_crlf_tolerated(self, tmp_path):
        path = tmp_path / "data.tsv"
        path.write_bytes(b"t1\thello\tINFORMATIVE\r\n")
        assert read_dataset(path)[0].label is INFO

    @pytest.mark.parametrize(
        "content, fragment",
        [
            ("t1\thello\n\nt2\tbye\n", "line 2: blank line"),
            ("justone\n", "expected 2 or 3"),
            ("a\tb\tc\td\n", "expected 2 or 3"),
            ("t1\thi\tMAYBE\n", "unknown label 'MAYBE'"),
            ("t1\ta\tINFORMATIVE\nt1\tb\tINFORMATIVE\n", "duplicate tweet id 't1'"),
            ("\tno id\n", "line 1"),
        ],
    )
    def test_malformed_inputs(self, tmp_path, content, fragment):
        path = tmp_path / "bad.tsv"
        path.write_text(content, "utf-8")
        with pytest.raises(DatasetFormatError) as exc_info:
            read_dataset(path)
        assert fragment in str(exc_info.value)

    def test_empty_file_is_empty_list(self, tmp_path):
        path = tmp_path / "empty.tsv"
        path.write_text("")
        assert read_dataset(path) == []


class TestWriteDataset:
    def test_round_trip(self, tmp_path):
        tweets = [
            Tweet("t1", "Confirmed: 120 cases", INFO),
            Tweet("t2", "beach day \U0001F60E", UNINF),
            Tweet("t3", "no label yet"),
        ]
        path = tmp_path / "out.tsv"
        write_dataset(tweets, path)
        assert read_dataset(path) == tweets

    def test_rejects_embedded_tab(self, tmp_path):
        with pytest.raises(DatasetFormatError, match="not representable"):
            write_dataset([Tweet("t1", "has\ttab", INFO)], tmp_path / "x.tsv")

    def test_empty_list_writes_empty_file(self, tmp_path):
        path = tmp_path / "none.tsv"
        write_dataset([], path)
        assert path.read_text() == ""

    @given(
        st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=10 ** 6),
                st.text(
                    alphabet=st.characters(
                        blacklist_characters="\t\n\r", blacklist_categories=("Cs",)
                    ),
                    min_size=1,
                    max_size=30,
                ).filter(lambda s: s == s.strip() and s),
                st.sampled_from([INFO, UNINF]),
            ),
            max_size=15,
            unique_by=lambda t: t[0],
        )
    )
    def test_round_trip_property(self, tmp_path_factory, rows):
        tweets = [Tweet(f"id{i}", text, label) for i, text, label in rows]
        path = tmp_path_factory.mktemp("ds") / "data.tsv"
        write_dataset(tweets, path)
        assert read_dataset(path) == tweets


class TestPredictions:
    def test_round_trip_with_scores(self, tmp_path):
        predictions = {"a": INFO, "b": UNINF}
        scores = {"a": 1.25, "b": -0.7071067811865476}
        path = tmp_path / "pred.tsv"
        write_predictions(predictions, path, scores=scores)
        text = path.read_text()
        assert "1.25" in text and "-0.70710678118654757" in text
        assert read_predictions(path) == predictions

    def test_round_trip_without_scores(self, tmp_path):
        predictions = {"a": INFO}
        path = tmp_path / "pred.tsv"
        write_predictions(predictions, path)
        assert path.read_text() == "a\tINFORMATIVE\n"
        assert read_predictions(path) == predictions

    def test_header_skipped(self, tmp_path):
        path = tmp_path / "pred.tsv"
        path.write_text("Id\tLabel\na\tINFORMATIVE\n", "utf-8")
        assert read_predictions(path) == {"a": INFO}

    @pytest.mark.parametrize(
        "content, fragment",
        [
            ("a\n", "expected Id, Label"),
            ("a\tINFORMATIVE\t0.5\tmore\n", "expected Id, Label"),
            ("\tINFORMATIVE\n", "empty id"),
            ("a\tYES\n", "unknown label"),
            ("a\tINFORMATIVE\na\tUNINFORMATIVE\n", "duplicate"),
            ("a\tINFORMATIVE\n\n", "line 2: blank line"),
        ],
    )
    def test_malformed_predictions(self, tmp_path, content, fragment):
        path = tmp_path / "bad.tsv"
        path.write_text(content, "utf-8")
        with pytest.raises(DatasetFormatError) as exc_info:
            read_predictions(path)
        assert fragment in str(exc_info.value)
