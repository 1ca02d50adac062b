"""Pooled hidden-state export.

Runs a frozen pretrained transformer over a tweet TSV and writes one
embedding JSONL record per tweet. The pooled representation is the
final-layer hidden state of the end-of-sequence token (or the first
token with pool="cls"); inference only, no fine-tuning.

The input TSV and output JSONL formats are interchange contracts
shared with the classification toolkit, restated here so this package
stands alone: TSV rows are Id <TAB> Text [<TAB> Label] with an
optional header detected by a literal "Id" first field; JSONL records
are {"id": ..., "vector": [...], "source": ...} with floats carrying
17 significant digits.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path

import torch
from transformers import AutoModel, AutoTokenizer

logger = logging.getLogger("embed_export")

POOL_CHOICES = ("eos", "cls")


class ExportError(ValueError):
    """Bad input file, bad config, or a model that will not load."""


@dataclass(frozen=True)
class ExportConfig:
    """Everything an export run depends on besides the input file."""

    model: str
    output: str
    pool: str = "eos"
    batch_size: int = 16
    max_length: int = 128
    debug_tokens: bool = False

    def __post_init__(self) -> None:
        if self.pool not in POOL_CHOICES:
            raise ExportError(f"pool must be one of {POOL_CHOICES}, got {self.pool!r}")
        if self.batch_size < 1:
            raise ExportError(f"batch_size must be >= 1, got {self.batch_size}")
        if self.max_length < 2:
            raise ExportError(f"max_length must be >= 2, got {self.max_length}")


def read_dataset_tsv(path: str | Path) -> list[tuple[str, str]]:
    """Read (id, text) pairs; a trailing label column is ignored."""
    rows: list[tuple[str, str]] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if line_number == 1 and line.split("\t")[0] == "Id":
                continue
            if not line:
                raise ExportError(f"line {line_number}: blank line")
            fields = line.split("\t")
            if len(fields) not in (2, 3):
                raise ExportError(
                    f"line {line_number}: expected 2 or 3 tab-separated fields, "
                    f"got {len(fields)}"
                )
            tweet_id, text = fields[0], fields[1]
            if not tweet_id:
                raise ExportError(f"line {line_number}: empty id")
            if not text:
                raise ExportError(f"line {line_number}: empty text for {tweet_id!r}")
            if tweet_id in seen:
                raise ExportError(f"line {line_number}: duplicate id {tweet_id!r}")
            seen.add(tweet_id)
            rows.append((tweet_id, text))
    return rows


def _load(config: ExportConfig):
    try:
        tokenizer = AutoTokenizer.from_pretrained(config.model)
        model = AutoModel.from_pretrained(config.model)
    except Exception as exc:
        raise ExportError(f"cannot load model {config.model!r}: {exc}")
    model.eval()
    return tokenizer, model


def _pool(hidden: torch.Tensor, mask: torch.Tensor, pool: str) -> torch.Tensor:
    if pool == "cls":
        return hidden[:, 0]
    lengths = mask.sum(dim=1)  # padding carries mask 0, so this finds </s>
    return hidden[torch.arange(hidden.size(0)), lengths - 1]


def export(input_path: str | Path, config: ExportConfig) -> tuple[int, int]:
    """Write one pooled record per tweet; returns (count, dimension)."""
    rows = read_dataset_tsv(input_path)
    tokenizer, model = _load(config)
    if not rows:
        Path(config.output).write_text("", "utf-8")
        return 0, int(model.config.hidden_size)

    # flag truncation before it silently happens inside the batch call
    full = tokenizer([text for _, text in rows], truncation=False)["input_ids"]
    for (tweet_id, _), ids in zip(rows, full):
        if len(ids) > config.max_length:
            logger.warning(
                "tweet %s: %d tokens exceed max_length=%d; truncating",
                tweet_id, len(ids), config.max_length,
            )

    dim = int(model.config.hidden_size)
    with open(config.output, "w", encoding="utf-8") as handle, torch.no_grad():
        for start in range(0, len(rows), config.batch_size):
            batch = rows[start : start + config.batch_size]
            encoded = tokenizer(
                [text for _, text in batch],
                padding=True,
                truncation=True,
                max_length=config.max_length,
                return_tensors="pt",
            )
            hidden = model(**encoded).last_hidden_state
            pooled = _pool(hidden, encoded["attention_mask"], config.pool)
            for row_index, (tweet_id, _) in enumerate(batch):
                vector = ", ".join(
                    f"{float(v):.17g}" for v in pooled[row_index].tolist()
                )
                source = json.dumps(f"{config.model} pool={config.pool}")
                line = '{"id": %s, "vector": [%s], "source": %s' % (
                    json.dumps(tweet_id, ensure_ascii=False), vector, source,
                )
                if config.debug_tokens:
                    n_real = int(encoded["attention_mask"][row_index].sum())
                    pieces = tokenizer.convert_ids_to_tokens(
                        encoded["input_ids"][row_index][:n_real]
                    )
                    line += ', "debug_tokens": %s' % json.dumps(
                        pieces, ensure_ascii=False
                    )
                handle.write(line + "}\n")
    return len(rows), dim
