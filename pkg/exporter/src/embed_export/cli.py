"""The embed-export command: one action, the export itself."""

from __future__ import annotations

import argparse
import logging
import sys

from .export import POOL_CHOICES, ExportConfig, ExportError, export


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="embed-export",
        description=(
            "Run a frozen pretrained transformer over a tweet TSV and "
            "write pooled hidden states as embedding JSONL"
        ),
    )
    parser.add_argument("--model", required=True, help="model name or local path")
    parser.add_argument("--input", required=True, help="dataset TSV (Id, Text[, Label])")
    parser.add_argument("--output", required=True, help="embedding JSONL to write")
    parser.add_argument("--pool", choices=POOL_CHOICES, default="eos")
    parser.add_argument("--batch-size", type=int, default=16)
    parser.add_argument("--max-length", type=int, default=128)
    parser.add_argument(
        "--debug-tokens", action="store_true",
        help="record each tweet's subword split in a debug_tokens field",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(format="%(levelname)s %(message)s")
    try:
        config = ExportConfig(
            model=args.model,
            output=args.output,
            pool=args.pool,
            batch_size=args.batch_size,
            max_length=args.max_length,
            debug_tokens=args.debug_tokens,
        )
        count, dim = export(args.input, config)
    except (ExportError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"{count} embeddings of dimension {dim} written to {args.output}")
    return 0


def console_main() -> None:
    raise SystemExit(main())
