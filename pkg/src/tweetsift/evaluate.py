"""Metrics and error analysis.

Precision/recall/F1 with INFORMATIVE as the positive class, confusion
matrices, cross-model miss-classification intersections, and the
per-class histogram of the power-transformed PROB feature.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .errors import EvaluationError
from .features import power_transform, prob_numeric
from .normalize import Label, Tweet

HISTOGRAM_BINS = 20


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class EvalReport:
    confusion: ConfusionMatrix
    precision: float
    recall: float
    f1: float
    fp_ids: frozenset[str]
    fn_ids: frozenset[str]
    evaluated_ids: frozenset[str]
    model_name: str = ""

    def to_dict(self) -> dict:
        return {
            "model": self.model_name,
            "confusion": {
                "tp": self.confusion.tp,
                "fp": self.confusion.fp,
                "fn": self.confusion.fn,
                "tn": self.confusion.tn,
            },
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "fp_ids": sorted(self.fp_ids),
            "fn_ids": sorted(self.fn_ids),
        }


@dataclass(frozen=True)
class IntersectionReport:
    """Share of the base model's errors also made by the reference.

    A percentage is None when the base model has no errors of that
    kind; the ratio is undefined there, not zero.
    """

    shared_fp_pct: float | None
    shared_fn_pct: float | None
    base_model: str
    reference_model: str

    def to_dict(self) -> dict:
        return {
            "base_model": self.base_model,
            "reference_model": self.reference_model,
            "shared_fp_pct": self.shared_fp_pct,
            "shared_fn_pct": self.shared_fn_pct,
        }


def _preview(ids: set[str], limit: int = 10) -> str:
    shown = sorted(ids)[:limit]
    suffix = f" (+{len(ids) - limit} more)" if len(ids) > limit else ""
    return f"{shown}{suffix}"


def evaluate(
    predictions: dict[str, Label],
    gold: dict[str, Label],
    model_name: str = "",
) -> EvalReport:
    """Score predictions against gold labels over the same id set."""
    if not predictions or not gold:
        raise EvaluationError("prediction and gold maps must be non-empty")
    pred_ids, gold_ids = set(predictions), set(gold)
    if pred_ids != gold_ids:
        raise EvaluationError(
            "prediction/gold id mismatch: "
            f"missing={_preview(gold_ids - pred_ids)}, "
            f"extra={_preview(pred_ids - gold_ids)}"
        )
    tp = fp = fn = tn = 0
    fp_ids: set[str] = set()
    fn_ids: set[str] = set()
    for tweet_id, predicted in predictions.items():
        actual = gold[tweet_id]
        if predicted is Label.INFORMATIVE:
            if actual is Label.INFORMATIVE:
                tp += 1
            else:
                fp += 1
                fp_ids.add(tweet_id)
        elif actual is Label.INFORMATIVE:
            fn += 1
            fn_ids.add(tweet_id)
        else:
            tn += 1
    precision = tp / (tp + fp) if tp + fp > 0 else 0.0
    recall = tp / (tp + fn) if tp + fn > 0 else 0.0
    f1 = (
        2 * precision * recall / (precision + recall)
        if precision + recall > 0
        else 0.0
    )
    return EvalReport(
        confusion=ConfusionMatrix(tp, fp, fn, tn),
        precision=precision,
        recall=recall,
        f1=f1,
        fp_ids=frozenset(fp_ids),
        fn_ids=frozenset(fn_ids),
        evaluated_ids=frozenset(pred_ids),
        model_name=model_name,
    )


def intersect_errors(base: EvalReport, reference: EvalReport) -> IntersectionReport:
    """Percentage of the base model's FP and FN ids the reference shares."""
    if base.evaluated_ids != reference.evaluated_ids:
        raise EvaluationError(
            "intersection requires reports over the same id universe"
        )
    shared_fp = None
    if base.confusion.fp > 0:
        shared_fp = 100.0 * len(base.fp_ids & reference.fp_ids) / base.confusion.fp
    shared_fn = None
    if base.confusion.fn > 0:
        shared_fn = 100.0 * len(base.fn_ids & reference.fn_ids) / base.confusion.fn
    return IntersectionReport(shared_fp, shared_fn, base.model_name, reference.model_name)


@dataclass(frozen=True)
class HistogramReport:
    """Per-class binned counts of power_transform(prob_numeric(text)).

    Bins are equal-width over [0, 1]; the value 1.0 lands in the last
    bin. Classes with no tweets get all-zero counts.
    """

    counts: dict[Label, tuple[int, ...]]
    n_bins: int = HISTOGRAM_BINS

    def rows(self) -> list[tuple[float, float, str, int]]:
        out = []
        for label in (Label.INFORMATIVE, Label.UNINFORMATIVE):
            for bin_index, count in enumerate(self.counts[label]):
                out.append(
                    (
                        bin_index / self.n_bins,
                        (bin_index + 1) / self.n_bins,
                        label.value,
                        count,
                    )
                )
        return out

    def to_dict(self) -> dict:
        return {
            "n_bins": self.n_bins,
            "counts": {label.value: list(c) for label, c in self.counts.items()},
        }


def feature_distribution_report(dataset: list[Tweet]) -> HistogramReport:
    """Histogram the transformed PROB feature per gold class."""
    counts = {
        Label.INFORMATIVE: [0] * HISTOGRAM_BINS,
        Label.UNINFORMATIVE: [0] * HISTOGRAM_BINS,
    }
    for tweet in dataset:
        if tweet.label is None:
            raise EvaluationError(f"tweet {tweet.id!r} has no label")
        value = power_transform(prob_numeric(tweet.text).value)
        bin_index = min(int(value * HISTOGRAM_BINS), HISTOGRAM_BINS - 1)
        counts[tweet.label][bin_index] += 1
    return HistogramReport(
        counts={label: tuple(c) for label, c in counts.items()}
    )


def write_histogram_csv(report: HistogramReport, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["bin_low", "bin_high", "class", "count"])
        for bin_low, bin_high, label, count in report.rows():
            writer.writerow([bin_low, bin_high, label, count])
