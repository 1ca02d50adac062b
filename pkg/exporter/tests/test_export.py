"""Export contract: format, pooling, determinism, interchange."""

from __future__ import annotations

import json
import logging

import numpy as np
import pytest

from embed_export import ExportConfig, ExportError, export, read_dataset_tsv
from embed_export.cli import main

# the consumer side of the interchange: exported files must load
# through the classification toolkit's reader with zero errors
from tweetsift.embeddings import load_embeddings


class TestReadDatasetTsv:
    def test_header_and_label_column(self, sample_tsv):
        rows = read_dataset_tsv(sample_tsv)
        assert len(rows) == 10
        assert rows[0] == ("t01", "Confirmed: 523 new cases in the region today")

    def test_two_field_rows(self, tmp_path):
        path = tmp_path / "x.tsv"
        path.write_text("a\thello\nb\tworld\n", "utf-8")
        assert read_dataset_tsv(path) == [("a", "hello"), ("b", "world")]

    @pytest.mark.parametrize(
        "content, fragment",
        [
            ("a\thello\n\n", "line 2: blank line"),
            ("only-one-field\n", "expected 2 or 3"),
            ("\ttext\n", "empty id"),
            ("a\t\n", "empty text"),
            ("a\tx\na\ty\n", "duplicate id"),
        ],
    )
    def test_rejections(self, tmp_path, content, fragment):
        path = tmp_path / "bad.tsv"
        path.write_text(content, "utf-8")
        with pytest.raises(ExportError) as exc_info:
            read_dataset_tsv(path)
        assert fragment in str(exc_info.value)


class TestExportConfig:
    def test_defaults(self):
        config = ExportConfig(model="m", output="o")
        assert (config.pool, config.batch_size, config.max_length) == ("eos", 16, 128)

    @pytest.mark.parametrize(
        "kwargs",
        [{"pool": "mean"}, {"batch_size": 0}, {"max_length": 1}],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ExportError):
            ExportConfig(model="m", output="o", **kwargs)


class TestExport:
    def test_interchange_contract(self, tiny_model_dir, sample_tsv, tmp_path):
        out = tmp_path / "emb.jsonl"
        count, dim = export(
            sample_tsv, ExportConfig(model=tiny_model_dir, output=str(out))
        )
        assert (count, dim) == (10, 16)
        records = load_embeddings(out)  # raises on any validation error
        assert len(records) == 10
        assert all(r.vector.shape == (dim,) for r in records.values())
        assert all(np.isfinite(r.vector).all() for r in records.values())
        print("[SECONDARY] exporter interchange: PASS "
              f"(10 records, dim {dim}, zero load errors)")

    def test_repeat_export_agrees(self, tiny_model_dir, sample_tsv, tmp_path):
        config = dict(model=tiny_model_dir, pool="eos")
        first = tmp_path / "a.jsonl"
        second = tmp_path / "b.jsonl"
        export(sample_tsv, ExportConfig(output=str(first), **config))
        export(sample_tsv, ExportConfig(output=str(second), **config))
        a = load_embeddings(first)
        b = load_embeddings(second)
        assert set(a) == set(b)
        for tweet_id in a:
            np.testing.assert_allclose(
                a[tweet_id].vector, b[tweet_id].vector, atol=1e-6, rtol=0
            )

    def test_batch_size_does_not_change_vectors(
        self, tiny_model_dir, sample_tsv, tmp_path
    ):
        small = tmp_path / "small.jsonl"
        large = tmp_path / "large.jsonl"
        export(
            sample_tsv,
            ExportConfig(model=tiny_model_dir, output=str(small), batch_size=3),
        )
        export(
            sample_tsv,
            ExportConfig(model=tiny_model_dir, output=str(large), batch_size=32),
        )
        a, b = load_embeddings(small), load_embeddings(large)
        for tweet_id in a:
            np.testing.assert_allclose(
                a[tweet_id].vector, b[tweet_id].vector, atol=1e-6, rtol=0
            )

    def test_pool_choice_recorded_and_distinct(
        self, tiny_model_dir, sample_tsv, tmp_path
    ):
        eos_path = tmp_path / "eos.jsonl"
        cls_path = tmp_path / "cls.jsonl"
        export(sample_tsv, ExportConfig(model=tiny_model_dir, output=str(eos_path)))
        export(
            sample_tsv,
            ExportConfig(model=tiny_model_dir, output=str(cls_path), pool="cls"),
        )
        eos = load_embeddings(eos_path)
        cls = load_embeddings(cls_path)
        assert all(r.source_tag.endswith("pool=eos") for r in eos.values())
        assert all(r.source_tag.endswith("pool=cls") for r in cls.values())
        assert any(
            not np.allclose(eos[i].vector, cls[i].vector, atol=1e-6) for i in eos
        )

    def test_truncation_logged_per_id(
        self, tiny_model_dir, tmp_path, caplog
    ):
        src = tmp_path / "long.tsv"
        src.write_text(
            "long1\t" + " ".join("word" for _ in range(40)) + "\n"
            "short1\tok\n",
            "utf-8",
        )
        out = tmp_path / "emb.jsonl"
        with caplog.at_level(logging.WARNING, logger="embed_export"):
            count, _ = export(
                src,
                ExportConfig(model=tiny_model_dir, output=str(out), max_length=16),
            )
        assert count == 2
        messages = [r.getMessage() for r in caplog.records]
        assert any("long1" in m and "max_length=16" in m for m in messages)
        assert not any("short1" in m for m in messages)
        # truncated or not, both records come out at the model width
        records = load_embeddings(out)
        assert {r.vector.shape for r in records.values()} == {(16,)}

    def test_debug_tokens_show_subword_split(
        self, tiny_model_dir, sample_tsv, tmp_path
    ):
        out = tmp_path / "emb.jsonl"
        export(
            sample_tsv,
            ExportConfig(model=tiny_model_dir, output=str(out), debug_tokens=True),
        )
        by_id = {}
        with open(out, encoding="utf-8") as handle:
            for line in handle:
                doc = json.loads(line)
                by_id[doc["id"]] = doc
        pieces = by_id["t02"]["debug_tokens"]  # "the coronavirus spreads fast"
        assert pieces[0] == "<s>" and pieces[-1] == "</s>"
        assert all(isinstance(p, str) for p in pieces)
        # the word is split into several subword pieces, none carrying
        # the whole surface form
        assert not any("coronavirus" in p for p in pieces)
        assert "".join(pieces[1:-1]).replace("Ġ", " ").strip().startswith(
            "the coronavirus"
        )
        # extra debug field must not break the interchange reader
        assert len(load_embeddings(out)) == 10

    def test_empty_dataset(self, tiny_model_dir, tmp_path):
        src = tmp_path / "empty.tsv"
        src.write_text("")
        out = tmp_path / "emb.jsonl"
        count, dim = export(src, ExportConfig(model=tiny_model_dir, output=str(out)))
        assert (count, dim) == (0, 16)
        assert load_embeddings(out) == {}

    def test_unloadable_model(self, tmp_path, sample_tsv):
        with pytest.raises(ExportError, match="cannot load model"):
            export(
                sample_tsv,
                ExportConfig(model=str(tmp_path / "nope"), output=str(tmp_path / "o")),
            )


class TestCli:
    def test_end_to_end(self, tiny_model_dir, sample_tsv, tmp_path, capsys):
        out = tmp_path / "emb.jsonl"
        code = main([
            "--model", tiny_model_dir, "--input", str(sample_tsv),
            "--output", str(out), "--pool", "eos", "--batch-size", "4",
        ])
        assert code == 0
        assert "10 embeddings of dimension 16" in capsys.readouterr().out
        assert len(load_embeddings(out)) == 10

    def test_model_load_failure_exits_nonzero(self, tmp_path, sample_tsv, capsys):
        code = main([
            "--model", str(tmp_path / "missing"), "--input", str(sample_tsv),
            "--output", str(tmp_path / "o.jsonl"),
        ])
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_rejected_pool_choice(self, tmp_path, sample_tsv):
        with pytest.raises(SystemExit) as exc_info:
            main([
                "--model", "m", "--input", str(sample_tsv),
                "--output", str(tmp_path / "o"), "--pool", "mean",
            ])
        assert exc_info.value.code == 2
