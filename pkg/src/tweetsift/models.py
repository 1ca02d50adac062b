"""Linear classifiers over fused features, trained by plain SGD.

Two losses cover the paper's model family: HINGE gives the linear SVM
baseline over TF-IDF, LOGISTIC gives the classification head over the
concatenated [embedding | TF-IDF | PROB] vector. Training is
per-example SGD with an inverse-scaling learning rate and is exactly
reproducible from (dataset order, seed, hyperparameters).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import ContractViolation, TrainingError, TweetsiftError
from .evaluate import evaluate
from .features import ProbFeature, SparseVector, TfidfModel, fit_tfidf, transform_tfidf
from .normalize import Label, TokenStream

MODEL_FORMAT_VERSION = 1
DEFAULT_SEEDS = (1, 2, 3, 4, 5)


class LossKind(Enum):
    HINGE = "HINGE"
    LOGISTIC = "LOGISTIC"


@dataclass(frozen=True)
class FeatureConfig:
    """Which feature blocks feed the classifier.

    The paper's ensembles in this encoding: PROB is (True, False,
    True), TFIDF is (True, True, False), PROB+TFIDF is (True, True,
    True), and the SVM baseline is (False, True, False).
    """

    use_embedding: bool
    use_tfidf: bool
    use_prob: bool
    tfidf_max_features: int = 6000

    def __post_init__(self) -> None:
        if not (self.use_embedding or self.use_tfidf or self.use_prob):
            raise ContractViolation("at least one feature source must be enabled")

    def describe(self) -> str:
        parts = []
        if self.use_embedding:
            parts.append("EMB")
        if self.use_tfidf:
            parts.append("TFIDF")
        if self.use_prob:
            parts.append("PROB")
        return "+".join(parts)


@dataclass(frozen=True)
class Hyperparams:
    eta0: float = 0.1
    reg_lambda: float = 1e-4
    epochs: int = 20

    def __post_init__(self) -> None:
        if self.eta0 <= 0 or self.reg_lambda < 0 or self.epochs < 1:
            raise ContractViolation(
                "need eta0 > 0, reg_lambda >= 0 and epochs >= 1"
            )


@dataclass(frozen=True)
class LinearModel:
    weights: np.ndarray
    bias: float
    loss_kind: LossKind
    seed: int
    feature_config: FeatureConfig | None = None
    train_meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "weights", np.asarray(self.weights, dtype=np.float64)
        )
        if not np.all(np.isfinite(self.weights)) or not math.isfinite(self.bias):
            raise ContractViolation("model parameters must be finite")


def concat_features(
    embedding: np.ndarray | None,
    tfidf: SparseVector | None,
    prob: ProbFeature | None,
    config: FeatureConfig,
) -> np.ndarray:
    """Fuse enabled feature blocks in the fixed order emb, tfidf, prob."""
    parts: list[np.ndarray] = []
    if config.use_embedding:
        if embedding is None:
            raise ContractViolation("config enables embedding but none was provided")
        parts.append(np.asarray(embedding, dtype=np.float64))
    if config.use_tfidf:
        if tfidf is None:
            raise ContractViolation("config enables TF-IDF but none was provided")
        parts.append(tfidf.to_dense())
    if config.use_prob:
        if prob is None:
            raise ContractViolation("config enables PROB but none was provided")
        parts.append(np.array([prob.value]))
    return np.concatenate(parts)


def _sigmoid(t: float) -> float:
    if t >= 0:
        return 1.0 / (1.0 + math.exp(-t))
    e = math.exp(t)
    return e / (1.0 + e)


def _log1pexp(t: float) -> float:
    if t > 0:
        return t + math.log1p(math.exp(-t))
    return math.log1p(math.exp(t))


def loss_value(
    w: np.ndarray,
    b: float,
    x: np.ndarray,
    y: float,
    loss_kind: LossKind,
    reg_lambda: float,
) -> float:
    """Single-example regularized objective, y in {-1, +1}."""
    z = y * (float(w @ x) + b)
    if loss_kind is LossKind.HINGE:
        data = max(0.0, 1.0 - z)
    else:
        data = _log1pexp(-z)
    return data + 0.5 * reg_lambda * float(w @ w)


def loss_gradient(
    w: np.ndarray,
    b: float,
    x: np.ndarray,
    y: float,
    loss_kind: LossKind,
    reg_lambda: float,
) -> tuple[np.ndarray, float]:
    """Analytic (d/dw, d/db) of loss_value at the same point.

    The hinge gradient is the usual subgradient, undefined only on
    the kink z = 1 where the active-side value is returned.
    """
    z = y * (float(w @ x) + b)
    if loss_kind is LossKind.HINGE:
        alpha = 1.0 if z < 1.0 else 0.0
    else:
        alpha = _sigmoid(-z)
    return -alpha * y * x + reg_lambda * w, -alpha * y


def train(
    dataset: Sequence[tuple[np.ndarray, Label]],
    loss_kind: LossKind,
    seed: int,
    hyperparams: Hyperparams = Hyperparams(),
    feature_config: FeatureConfig | None = None,
) -> LinearModel:
    """Fit a linear model by SGD over the regularized loss.

    Example order is reshuffled every epoch by one generator seeded
    from `seed`; the learning rate follows eta0/(1 + eta0*lambda*t)
    with t counting updates from 0. Identical inputs give bit-identical
    parameters.
    """
    if not dataset:
        raise TrainingError("training set is empty")
    labels = {label for _, label in dataset}
    if labels != {Label.INFORMATIVE, Label.UNINFORMATIVE}:
        raise TrainingError(
            f"training set must contain both classes, got {sorted(l.value for l in labels)}"
        )
    try:
        X = np.stack([np.asarray(x, dtype=np.float64) for x, _ in dataset])
    except ValueError:
        raise ContractViolation("feature vectors must share one dimension")
    y = np.array(
        [1.0 if label is Label.INFORMATIVE else -1.0 for _, label in dataset]
    )
    n, dim = X.shape
    rng = np.random.default_rng(seed)
    eta0, lam = hyperparams.eta0, hyperparams.reg_lambda
    hinge = loss_kind is LossKind.HINGE
    w = np.zeros(dim)
    b = 0.0
    t = 0
    for _ in range(hyperparams.epochs):
        for i in rng.permutation(n):
            eta = eta0 / (1.0 + eta0 * lam * t)
            t += 1
            x, yi = X[i], y[i]
            z = yi * (float(w @ x) + b)
            if hinge:
                alpha = 1.0 if z < 1.0 else 0.0
            else:
                alpha = _sigmoid(-z)
            w *= 1.0 - eta * lam
            if alpha != 0.0:
                w += (eta * alpha * yi) * x
                b += eta * alpha * yi
    train_meta = {
        "epochs": hyperparams.epochs,
        "eta0": eta0,
        "reg_lambda": lam,
        "schedule": "eta0/(1+eta0*lambda*t)",
    }
    return LinearModel(w, float(b), loss_kind, seed, feature_config, train_meta)


def predict(model: LinearModel, x: np.ndarray) -> tuple[Label, float]:
    """Score one feature vector; ties (score exactly 0) are UNINFORMATIVE."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != model.weights.shape:
        raise ContractViolation(
            f"feature dimension {x.shape} does not match model {model.weights.shape}"
        )
    score = float(model.weights @ x) + model.bias
    label = Label.INFORMATIVE if score > 0 else Label.UNINFORMATIVE
    return label, score


def save_model(model: LinearModel, path: str | Path) -> None:
    """Write the model file; float formatting is part of the contract.

    Weights and bias carry 17 significant digits so reloading restores
    them bit for bit, which json.dumps alone does not guarantee; the
    document is therefore assembled by hand in a fixed key order.
    """
    config = None
    if model.feature_config is not None:
        config = {
            "use_embedding": model.feature_config.use_embedding,
            "use_tfidf": model.feature_config.use_tfidf,
            "use_prob": model.feature_config.use_prob,
            "tfidf_max_features": model.feature_config.tfidf_max_features,
        }
    weights = ", ".join(f"{x:.17g}" for x in model.weights)
    text = (
        '{"version": %d, "loss_kind": %s, "feature_config": %s, "seed": %d, '
        '"bias": %s, "weights": [%s], "train_meta": %s}'
        % (
            MODEL_FORMAT_VERSION,
            json.dumps(model.loss_kind.value),
            json.dumps(config, sort_keys=True),
            model.seed,
            f"{model.bias:.17g}",
            weights,
            json.dumps(model.train_meta, sort_keys=True),
        )
    )
    Path(path).write_text(text + "\n", "utf-8")


def load_model(path: str | Path) -> LinearModel:
    doc = json.loads(Path(path).read_text("utf-8"))
    if doc.get("version") != MODEL_FORMAT_VERSION:
        raise TrainingError(f"unsupported model version {doc.get('version')!r}")
    config = None
    if doc["feature_config"] is not None:
        config = FeatureConfig(**doc["feature_config"])
    return LinearModel(
        weights=np.array(doc["weights"], dtype=np.float64),
        bias=float(doc["bias"]),
        loss_kind=LossKind(doc["loss_kind"]),
        seed=doc["seed"],
        feature_config=config,
        train_meta=doc["train_meta"],
    )


@dataclass(frozen=True)
class FeatureBundle:
    """Per-tweet raw material from which any FeatureConfig can assemble."""

    id: str
    stream: TokenStream
    embedding: np.ndarray | None
    prob: float
    label: Label | None = None


def loss_for(config: FeatureConfig) -> LossKind:
    """LOGISTIC for fusion heads, HINGE for embedding-free baselines."""
    return LossKind.LOGISTIC if config.use_embedding else LossKind.HINGE


def assemble_features(
    bundle: FeatureBundle,
    config: FeatureConfig,
    tfidf_model: TfidfModel | None = None,
) -> np.ndarray:
    embedding = bundle.embedding if config.use_embedding else None
    tfidf = None
    if config.use_tfidf:
        if tfidf_model is None:
            raise ContractViolation("config enables TF-IDF but no fitted model was given")
        tfidf = transform_tfidf(tfidf_model, bundle.stream)
    prob = ProbFeature(bundle.prob) if config.use_prob else None
    return concat_features(embedding, tfidf, prob, config)


@dataclass(frozen=True)
class RunRow:
    config: FeatureConfig
    hyperparams: Hyperparams
    seed: int
    f1: float | None
    error: str | None = None


def sweep(
    train_set: Sequence[FeatureBundle],
    val_set: Sequence[FeatureBundle],
    configs: Sequence[tuple[FeatureConfig, Hyperparams]],
    seeds: Sequence[int] | None = None,
) -> list[RunRow]:
    """Train every (config, hyperparams, seed) cell, rank by val F1.

    TF-IDF is fitted on the training streams once per distinct
    max_features value; the loss per row follows loss_for(config).
    Failed cells stay in the table with their error message and sort
    last; the sweep itself keeps going.
    """
    if seeds is None:
        seeds = DEFAULT_SEEDS
    if not seeds:
        raise ContractViolation("seeds must be non-empty")
    if not train_set or not val_set:
        raise TrainingError("sweep requires non-empty train and validation sets")
    if any(b.label is None for b in train_set) or any(b.label is None for b in val_set):
        raise TrainingError("sweep requires labeled bundles on both sides")
    gold = {b.id: b.label for b in val_set}
    rows: list[RunRow] = []
    tfidf_cache: dict[int, TfidfModel] = {}
    for config, hp in configs:
        try:
            tfidf_model = None
            if config.use_tfidf:
                cap = config.tfidf_max_features
                if cap not in tfidf_cache:
                    tfidf_cache[cap] = fit_tfidf(
                        [b.stream for b in train_set], cap
                    )
                tfidf_model = tfidf_cache[cap]
            train_pairs = [
                (assemble_features(b, config, tfidf_model), b.label)
                for b in train_set
            ]
            val_vectors = [
                (b.id, assemble_features(b, config, tfidf_model)) for b in val_set
            ]
        except TweetsiftError as exc:
            rows.extend(RunRow(config, hp, seed, None, str(exc)) for seed in seeds)
            continue
        for seed in seeds:
            try:
                model = train(train_pairs, loss_for(config), seed, hp, config)
                predictions = {
                    bundle_id: predict(model, x)[0] for bundle_id, x in val_vectors
                }
                report = evaluate(predictions, gold, model_name=config.describe())
                rows.append(RunRow(config, hp, seed, report.f1))
            except TweetsiftError as exc:
                rows.append(RunRow(config, hp, seed, None, str(exc)))
    rows.sort(key=lambda r: (r.f1 is None, -(r.f1 or 0.0)))
    return rows
