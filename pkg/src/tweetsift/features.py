"""Document-term features: TF-IDF vectors and the PROB scalar.

The TF-IDF side fits a capped vocabulary on a preprocessed corpus and
transforms token streams into L2-normalized sparse vectors. The PROB
side is a single handcrafted number per tweet: the probability that a
character of the emoji-stripped text is a decimal digit.
"""

from __future__ import annotations

import json
import math
import unicodedata
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ContractViolation, FitError
from .normalize import TokenStream, strip_emoji

TFIDF_FORMAT_VERSION = 1


@dataclass(frozen=True)
class TfidfModel:
    """Fitted vocabulary with per-term idf weights.

    Column indices run contiguously from 0 and are assigned in
    alphabetical term order; idf is indexed by column.
    """

    vocabulary: dict[str, int]
    idf: np.ndarray
    max_features: int
    corpus_size: int

    def __post_init__(self) -> None:
        if len(self.vocabulary) > self.max_features:
            raise ContractViolation("vocabulary exceeds max_features")
        if sorted(self.vocabulary.values()) != list(range(len(self.vocabulary))):
            raise ContractViolation("column indices must be contiguous from 0")
        if len(self.idf) != len(self.vocabulary):
            raise ContractViolation("idf length must match vocabulary size")
        if not np.all(np.isfinite(self.idf)) or np.any(self.idf <= 0):
            raise ContractViolation("idf values must be strictly positive and finite")

    @property
    def dim(self) -> int:
        return len(self.vocabulary)


@dataclass(frozen=True)
class SparseVector:
    indices: np.ndarray
    values: np.ndarray
    dim: int

    def __post_init__(self) -> None:
        if len(self.indices) != len(self.values):
            raise ContractViolation("indices and values must have equal length")
        if len(self.indices) > 0:
            if np.any(np.diff(self.indices) <= 0):
                raise ContractViolation("indices must be strictly increasing")
            if self.indices[0] < 0 or self.indices[-1] >= self.dim:
                raise ContractViolation("index out of range")
            if not np.all(np.isfinite(self.values)) or np.any(self.values == 0):
                raise ContractViolation("values must be finite and nonzero")

    def to_dense(self) -> np.ndarray:
        dense = np.zeros(self.dim)
        dense[self.indices] = self.values
        return dense


@dataclass(frozen=True)
class ProbFeature:
    value: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.value <= 1.0:
            raise ContractViolation(f"PROB value {self.value} outside [0, 1]")


def fit_tfidf(corpus: list[TokenStream], max_features: int) -> TfidfModel:
    """Fit vocabulary and idf weights on a preprocessed corpus.

    The vocabulary keeps the max_features terms with highest document
    frequency, ties broken lexicographically ascending, and
    idf(t) = ln((1+N)/(1+df(t))) + 1 with N the corpus size.
    """
    if max_features <= 0:
        raise ContractViolation(f"max_features must be positive, got {max_features}")
    if not corpus:
        raise FitError("cannot fit TF-IDF on an empty corpus")
    df: Counter[str] = Counter()
    for stream in corpus:
        df.update(set(stream.tokens))
    selected = sorted(df.items(), key=lambda kv: (-kv[1], kv[0]))[:max_features]
    terms = sorted(term for term, _ in selected)
    n = len(corpus)
    idf = np.array(
        [math.log((1 + n) / (1 + df[t])) + 1.0 for t in terms], dtype=np.float64
    )
    vocabulary = {term: column for column, term in enumerate(terms)}
    return TfidfModel(vocabulary, idf, max_features, n)


def transform_tfidf(model: TfidfModel, stream: TokenStream) -> SparseVector:
    """Map a stream to its L2-normalized tf-idf vector.

    tf is the raw in-stream count; out-of-vocabulary terms are
    ignored; a stream with no in-vocabulary terms maps to the zero
    vector (returned empty rather than normalized).
    """
    counts = Counter(t for t in stream.tokens if t in model.vocabulary)
    if not counts:
        empty = np.empty(0)
        return SparseVector(empty.astype(np.int64), empty, model.dim)
    items = sorted((model.vocabulary[t], c) for t, c in counts.items())
    indices = np.array([i for i, _ in items], dtype=np.int64)
    values = np.array([c * model.idf[i] for i, c in items], dtype=np.float64)
    values /= np.linalg.norm(values)
    return SparseVector(indices, values, model.dim)


def prob_numeric(text: str) -> ProbFeature:
    """Probability that a character of the emoji-stripped text is a digit.

    Digits are the Unicode decimal-digit category, so "٤" counts and
    "²" does not. Empty stripped text gives 0.
    """
    stripped = strip_emoji(text)
    if not stripped:
        return ProbFeature(0.0)
    digits = sum(1 for ch in stripped if unicodedata.category(ch) == "Nd")
    return ProbFeature(digits / len(stripped))


def power_transform(p: float) -> float:
    """x^(1/5), for distribution reports only, never a model feature."""
    if not 0.0 <= p <= 1.0:
        raise ContractViolation(f"power_transform domain is [0, 1], got {p}")
    return p ** (1 / 5)


def save_tfidf(model: TfidfModel, path: str | Path) -> None:
    """Write the model as versioned JSON, terms in column order."""
    by_column = sorted(model.vocabulary.items(), key=lambda kv: kv[1])
    doc = {
        "version": TFIDF_FORMAT_VERSION,
        "max_features": model.max_features,
        "corpus_size": model.corpus_size,
        "terms": [
            {"term": term, "index": column, "idf": float(model.idf[column])}
            for term, column in by_column
        ],
    }
    Path(path).write_text(json.dumps(doc, ensure_ascii=False, indent=1), "utf-8")


def load_tfidf(path: str | Path) -> TfidfModel:
    doc = json.loads(Path(path).read_text("utf-8"))
    if doc.get("version") != TFIDF_FORMAT_VERSION:
        raise FitError(f"unsupported TF-IDF model version {doc.get('version')!r}")
    vocabulary = {entry["term"]: entry["index"] for entry in doc["terms"]}
    idf = np.zeros(len(vocabulary))
    for entry in doc["terms"]:
        idf[entry["index"]] = entry["idf"]
    return TfidfModel(vocabulary, idf, doc["max_features"], doc["corpus_size"])
