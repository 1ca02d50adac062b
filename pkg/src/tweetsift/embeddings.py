"""Pooled embedding ingestion plus a deterministic stand-in embedder.

Real embeddings come from an external exporter as JSONL, one record
per line: {"id": ..., "vector": [...], "source": ...}. The hash
embedder exists so the pipeline runs end to end without any model
weights; it hashes tokens to signed coordinates and is deterministic
in (stream, d, seed).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ContractViolation, EmbeddingLoadError
from .normalize import TokenStream


@dataclass(frozen=True)
class EmbeddingRecord:
    id: str
    vector: np.ndarray
    source_tag: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "vector", np.asarray(self.vector, dtype=np.float64)
        )
        if not self.id:
            raise ContractViolation("embedding record id must be non-empty")
        if self.vector.ndim != 1:
            raise ContractViolation(f"vector for {self.id!r} must be 1-dimensional")
        if not np.all(np.isfinite(self.vector)):
            raise ContractViolation(f"vector for {self.id!r} has non-finite entries")


def _parse_line(line: str, line_number: int) -> EmbeddingRecord:
    try:
        doc = json.loads(line)
    except json.JSONDecodeError as exc:
        raise EmbeddingLoadError(f"line {line_number}: malformed JSON ({exc.msg})")
    if not isinstance(doc, dict):
        raise EmbeddingLoadError(f"line {line_number}: expected a JSON object")
    record_id = doc.get("id")
    vector = doc.get("vector")
    if not isinstance(record_id, str) or not record_id:
        raise EmbeddingLoadError(f"line {line_number}: missing or empty id")
    if not isinstance(vector, list) or not all(
        type(x) in (int, float) for x in vector
    ):
        raise EmbeddingLoadError(f"line {line_number}: vector must be a number array")
    if not all(math.isfinite(x) for x in vector):
        raise EmbeddingLoadError(f"line {line_number}: non-finite vector value")
    source = doc.get("source", "")
    if not isinstance(source, str):
        raise EmbeddingLoadError(f"line {line_number}: source must be a string")
    return EmbeddingRecord(record_id, np.array(vector, dtype=np.float64), source)


def load_embeddings(path: str | Path) -> dict[str, EmbeddingRecord]:
    """Read an embedding JSONL file, validating as it goes.

    Every record must have a unique id, finite values, and the same
    dimension as the first record; violations raise with the line
    number. An empty file is a valid empty map.
    """
    records: dict[str, EmbeddingRecord] = {}
    dim: int | None = None
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            if not line.strip():
                raise EmbeddingLoadError(f"line {line_number}: blank line")
            record = _parse_line(line, line_number)
            if record.id in records:
                raise EmbeddingLoadError(
                    f"line {line_number}: duplicate id {record.id!r}"
                )
            if dim is None:
                dim = record.vector.shape[0]
            elif record.vector.shape[0] != dim:
                raise EmbeddingLoadError(
                    f"line {line_number}: dimension {record.vector.shape[0]} "
                    f"does not match {dim}"
                )
            records[record.id] = record
    return records


def write_embeddings(
    records: list[EmbeddingRecord] | dict[str, EmbeddingRecord],
    path: str | Path,
) -> None:
    """Write records as JSONL with 17-significant-digit floats.

    Serialization is assembled by hand because the float formatting is
    part of the file contract and json.dumps offers no control there.
    """
    ordered = list(records.values()) if isinstance(records, dict) else records
    dims = {record.vector.shape[0] for record in ordered}
    if len(dims) > 1:
        raise ContractViolation(f"mixed embedding dimensions: {sorted(dims)}")
    with open(path, "w", encoding="utf-8") as handle:
        for record in ordered:
            numbers = ", ".join(f"{x:.17g}" for x in record.vector)
            handle.write(
                '{"id": %s, "vector": [%s], "source": %s}\n'
                % (
                    json.dumps(record.id, ensure_ascii=False),
                    numbers,
                    json.dumps(record.source_tag, ensure_ascii=False),
                )
            )


# FNV-1a 64-bit parameters; chosen for portability, not hash quality.
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


def _fnv1a64(data: bytes, seed: int) -> int:
    h = _FNV_OFFSET ^ (seed & _MASK64)
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME) & _MASK64
    return h


def hash_embed(stream: TokenStream, d: int, seed: int = 0) -> EmbeddingRecord:
    """Deterministic toy embedding: signed token counts, L2-normalized.

    Each token hashes to a coordinate in [0, d) and a sign from the
    hash's top bit; an empty stream gives the zero vector.
    """
    if d < 1:
        raise ContractViolation(f"embedding dimension must be >= 1, got {d}")
    vector = np.zeros(d)
    for token in stream.tokens:
        h = _fnv1a64(token.encode("utf-8"), seed)
        vector[h % d] += 1.0 if h >> 63 == 0 else -1.0
    norm = np.linalg.norm(vector)
    if norm > 0:
        vector /= norm
    return EmbeddingRecord(
        id=stream.source_id,
        vector=vector,
        source_tag=f"hash-embed(d={d}, seed={seed})",
    )
