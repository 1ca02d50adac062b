"""Dataset and prediction files.

Datasets travel as TSV, one tweet per line: Id, Text, and optionally
Label, tab-separated, UTF-8, with an optional header row detected by a
literal "Id" first field. Predictions use the same shape with Label
(and optionally a score) in place of free text.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ContractViolation, DatasetFormatError
from .normalize import Label, Tweet

_HEADER_SENTINEL = "Id"


def _parse_label(raw: str, line_number: int) -> Label:
    try:
        return Label(raw)
    except ValueError:
        raise DatasetFormatError(
            f"line {line_number}: unknown label {raw!r} "
            f"(expected INFORMATIVE or UNINFORMATIVE)"
        )


def read_dataset(path: str | Path) -> list[Tweet]:
    """Read a dataset TSV; labels may be absent (unlabeled data)."""
    tweets: list[Tweet] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if line_number == 1 and line.split("\t")[0] == _HEADER_SENTINEL:
                continue
            if not line:
                raise DatasetFormatError(f"line {line_number}: blank line")
            fields = line.split("\t")
            if len(fields) not in (2, 3):
                raise DatasetFormatError(
                    f"line {line_number}: expected 2 or 3 tab-separated fields, "
                    f"got {len(fields)}"
                )
            label = _parse_label(fields[2], line_number) if len(fields) == 3 else None
            try:
                tweet = Tweet(id=fields[0], text=fields[1], label=label)
            except ContractViolation as exc:
                raise DatasetFormatError(f"line {line_number}: {exc}")
            if tweet.id in seen:
                raise DatasetFormatError(
                    f"line {line_number}: duplicate tweet id {tweet.id!r}"
                )
            seen.add(tweet.id)
            tweets.append(tweet)
    return tweets


def write_dataset(tweets: list[Tweet], path: str | Path) -> None:
    """Write tweets as TSV without a header row.

    TSV is line-based, so ids and texts containing tabs or newlines
    are unrepresentable and rejected rather than silently mangled.
    """
    lines = []
    for tweet in tweets:
        for piece in (tweet.id, tweet.text):
            if "\t" in piece or "\n" in piece or "\r" in piece:
                raise DatasetFormatError(
                    f"tweet {tweet.id!r} contains a tab or newline; "
                    f"not representable as TSV"
                )
        fields = [tweet.id, tweet.text]
        if tweet.label is not None:
            fields.append(tweet.label.value)
        lines.append("\t".join(fields))
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), "utf-8")


def read_predictions(path: str | Path) -> dict[str, Label]:
    """Read a predictions TSV: Id, Label, optional trailing score."""
    predictions: dict[str, Label] = {}
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if line_number == 1 and line.split("\t")[0] == _HEADER_SENTINEL:
                continue
            if not line:
                raise DatasetFormatError(f"line {line_number}: blank line")
            fields = line.split("\t")
            if len(fields) not in (2, 3):
                raise DatasetFormatError(
                    f"line {line_number}: expected Id, Label and optional score"
                )
            if not fields[0]:
                raise DatasetFormatError(f"line {line_number}: empty id")
            if fields[0] in predictions:
                raise DatasetFormatError(
                    f"line {line_number}: duplicate tweet id {fields[0]!r}"
                )
            predictions[fields[0]] = _parse_label(fields[1], line_number)
    return predictions


def write_predictions(
    predictions: dict[str, Label],
    path: str | Path,
    scores: dict[str, float] | None = None,
) -> None:
    lines = []
    for tweet_id, label in predictions.items():
        fields = [tweet_id, label.value]
        if scores is not None:
            fields.append(f"{scores[tweet_id]:.17g}")
        lines.append("\t".join(fields))
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), "utf-8")
