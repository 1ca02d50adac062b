"""Command-line surface.

Subcommands: preprocess, fit-tfidf, hash-embed, train, sweep, predict,
evaluate, analyze. Settings come from an INI config file (--config)
with command-line flags taking precedence; every run is reproducible
from its inputs, config, and seeds, and outputs carry no timestamps.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import json
import sys
from pathlib import Path

from . import dataio
from .embeddings import hash_embed, load_embeddings, write_embeddings
from .errors import ContractViolation, DatasetFormatError, TweetsiftError
from .evaluate import (
    evaluate,
    feature_distribution_report,
    intersect_errors,
    write_histogram_csv,
)
from .features import fit_tfidf, load_tfidf, prob_numeric, save_tfidf
from .models import (
    DEFAULT_SEEDS,
    FeatureBundle,
    FeatureConfig,
    Hyperparams,
    LossKind,
    assemble_features,
    load_model,
    loss_for,
    predict,
    save_model,
    sweep,
    train,
)
from .normalize import (
    CoronaMode,
    NormalizationConfig,
    Tweet,
    normalize,
    tfidf_preprocess,
)


def _read_config(path: str | None) -> configparser.ConfigParser:
    cfg = configparser.ConfigParser()
    if path:
        try:
            with open(path, encoding="utf-8") as handle:
                cfg.read_file(handle)
        except configparser.Error as exc:
            raise ContractViolation(f"bad config file {path}: {exc}")
    return cfg


def _cfg_value(cfg, section, key, getter):
    if not cfg.has_option(section, key):
        return None
    try:
        return getter(section, key)
    except ValueError as exc:
        raise ContractViolation(f"config [{section}] {key}: {exc}")


def _cfg_str(cfg, section, key):
    return _cfg_value(cfg, section, key, cfg.get)


def _cfg_bool(cfg, section, key):
    return _cfg_value(cfg, section, key, cfg.getboolean)


def _cfg_int(cfg, section, key):
    return _cfg_value(cfg, section, key, cfg.getint)


def _cfg_float(cfg, section, key):
    return _cfg_value(cfg, section, key, cfg.getfloat)


def _pick(*values, default=None):
    """First value that was actually set; flags beat config beats default."""
    for value in values:
        if value is not None:
            return value
    return default


def _norm_config(args, cfg) -> NormalizationConfig:
    mode = _pick(
        args.corona_mode, _cfg_str(cfg, "normalize", "corona_mode"), default="standard"
    )
    try:
        corona = CoronaMode(str(mode).lower())
    except ValueError:
        raise ContractViolation(f"unknown corona mode {mode!r}")
    return NormalizationConfig(
        hashtag_segmentation=_pick(
            args.hashtag_segmentation,
            _cfg_bool(cfg, "normalize", "hashtag_segmentation"),
            default=True,
        ),
        corona_mode=corona,
        strip_emoji=_pick(
            args.strip_emoji, _cfg_bool(cfg, "normalize", "strip_emoji"), default=True
        ),
        lowercase=_pick(
            args.lowercase, _cfg_bool(cfg, "normalize", "lowercase"), default=False
        ),
    )


def _feature_config(args, cfg, max_features: int) -> FeatureConfig:
    return FeatureConfig(
        use_embedding=_pick(
            args.use_embedding, _cfg_bool(cfg, "features", "use_embedding"), default=True
        ),
        use_tfidf=_pick(
            args.use_tfidf, _cfg_bool(cfg, "features", "use_tfidf"), default=True
        ),
        use_prob=_pick(
            args.use_prob, _cfg_bool(cfg, "features", "use_prob"), default=True
        ),
        tfidf_max_features=max_features,
    )


def _hyperparams(args, cfg) -> Hyperparams:
    return Hyperparams(
        eta0=_pick(args.eta0, _cfg_float(cfg, "train", "eta0"), default=0.1),
        reg_lambda=_pick(
            args.reg_lambda, _cfg_float(cfg, "train", "reg_lambda"), default=1e-4
        ),
        epochs=_pick(args.epochs, _cfg_int(cfg, "train", "epochs"), default=20),
    )


def _embedder(args, cfg):
    """Resolve the embedding source: ('file', path), ('hash', d, seed), or None."""
    path = getattr(args, "embeddings", None)
    dim = getattr(args, "hash_dim", None)
    if path and dim is not None:
        raise ContractViolation("pass either --embeddings or --hash-dim, not both")
    if path:
        return ("file", path)
    if dim is not None:
        seed = _pick(
            getattr(args, "hash_seed", None), _cfg_int(cfg, "embedder", "seed"), default=0
        )
        return ("hash", dim, seed)
    kind = _cfg_str(cfg, "embedder", "kind")
    if kind is None:
        return None
    if kind == "file":
        cfg_path = _cfg_str(cfg, "embedder", "path")
        if not cfg_path:
            raise ContractViolation("config embedder kind=file needs a path")
        return ("file", cfg_path)
    if kind == "hash":
        cfg_dim = _cfg_int(cfg, "embedder", "dim")
        if cfg_dim is None:
            raise ContractViolation("config embedder kind=hash needs dim")
        return ("hash", cfg_dim, _pick(_cfg_int(cfg, "embedder", "seed"), default=0))
    raise ContractViolation(f"unknown embedder kind {kind!r}")


def _require_labels(tweets, role: str) -> None:
    for tweet in tweets:
        if tweet.label is None:
            raise DatasetFormatError(
                f"{role} dataset has unlabeled tweet {tweet.id!r}"
            )


def _bundles(tweets, norm_cfg, embedder, need_embedding) -> list[FeatureBundle]:
    records = None
    hash_spec = None
    if need_embedding:
        if embedder is None:
            raise ContractViolation(
                "feature config uses embeddings; give --embeddings or --hash-dim "
                "(or an [embedder] section in the config file)"
            )
        if embedder[0] == "file":
            records = load_embeddings(embedder[1])
        else:
            hash_spec = embedder[1:]
    bundles = []
    for tweet in tweets:
        stream = normalize(tweet, norm_cfg)
        embedding = None
        if need_embedding:
            if records is not None:
                record = records.get(tweet.id)
                if record is None:
                    raise ContractViolation(f"no embedding for tweet {tweet.id!r}")
                embedding = record.vector
            else:
                embedding = hash_embed(stream, hash_spec[0], hash_spec[1]).vector
        bundles.append(
            FeatureBundle(
                id=tweet.id,
                stream=tfidf_preprocess(stream),
                embedding=embedding,
                prob=prob_numeric(tweet.text).value,
                label=tweet.label,
            )
        )
    return bundles


def _write_json(doc: dict, path: str) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", "utf-8")


def cmd_preprocess(args) -> None:
    cfg = _read_config(args.config)
    norm_cfg = _norm_config(args, cfg)
    tweets = dataio.read_dataset(args.infile)
    rows = []
    for tweet in tweets:
        stream = normalize(tweet, norm_cfg)
        if not stream.tokens:
            raise DatasetFormatError(
                f"tweet {tweet.id!r} normalized to an empty token stream"
            )
        rows.append(Tweet(tweet.id, " ".join(stream.tokens), tweet.label))
    dataio.write_dataset(rows, args.out)
    print(f"{len(rows)} tweets written to {args.out}")


def cmd_fit_tfidf(args) -> None:
    cfg = _read_config(args.config)
    norm_cfg = _norm_config(args, cfg)
    max_features = _pick(
        args.max_features, _cfg_int(cfg, "features", "max_features"), default=6000
    )
    tweets = dataio.read_dataset(args.infile)
    streams = [tfidf_preprocess(normalize(t, norm_cfg)) for t in tweets]
    model = fit_tfidf(streams, max_features)
    save_tfidf(model, args.out)
    print(f"TF-IDF model with {model.dim} terms written to {args.out}")


def cmd_hash_embed(args) -> None:
    cfg = _read_config(args.config)
    norm_cfg = _norm_config(args, cfg)
    dim = _pick(args.dim, _cfg_int(cfg, "embedder", "dim"))
    if dim is None:
        raise ContractViolation("hash-embed needs --dim (or [embedder] dim)")
    seed = _pick(args.seed, _cfg_int(cfg, "embedder", "seed"), default=0)
    tweets = dataio.read_dataset(args.infile)
    records = [hash_embed(normalize(t, norm_cfg), dim, seed) for t in tweets]
    write_embeddings(records, args.out)
    print(f"{len(records)} embeddings written to {args.out}")


def cmd_train(args) -> None:
    cfg = _read_config(args.config)
    norm_cfg = _norm_config(args, cfg)
    max_features = _pick(
        args.max_features, _cfg_int(cfg, "features", "max_features"), default=6000
    )
    feature_cfg = _feature_config(args, cfg, max_features)
    hp = _hyperparams(args, cfg)
    seed = _pick(args.seed, _cfg_int(cfg, "train", "seed"), default=1)
    tweets = dataio.read_dataset(args.train)
    _require_labels(tweets, "training")
    bundles = _bundles(tweets, norm_cfg, _embedder(args, cfg), feature_cfg.use_embedding)
    tfidf_model = None
    if feature_cfg.use_tfidf:
        if args.tfidf_model:
            tfidf_model = load_tfidf(args.tfidf_model)
        else:
            tfidf_model = fit_tfidf(
                [b.stream for b in bundles], feature_cfg.tfidf_max_features
            )
            tfidf_out = args.save_tfidf or args.out + ".tfidf.json"
            save_tfidf(tfidf_model, tfidf_out)
            print(f"fitted TF-IDF model written to {tfidf_out}")
    loss_name = _pick(args.loss, _cfg_str(cfg, "train", "loss"))
    loss = LossKind(loss_name.upper()) if loss_name else loss_for(feature_cfg)
    dataset = [
        (assemble_features(b, feature_cfg, tfidf_model), b.label) for b in bundles
    ]
    model = train(dataset, loss, seed, hp, feature_cfg)
    save_model(model, args.out)
    print(f"{loss.value} model ({feature_cfg.describe()}) written to {args.out}")


def cmd_predict(args) -> None:
    cfg = _read_config(args.config)
    norm_cfg = _norm_config(args, cfg)
    model = load_model(args.model)
    feature_cfg = model.feature_config
    if feature_cfg is None:
        raise ContractViolation(
            "model file lacks a feature_config; cannot assemble features"
        )
    tweets = dataio.read_dataset(args.infile)
    bundles = _bundles(tweets, norm_cfg, _embedder(args, cfg), feature_cfg.use_embedding)
    tfidf_model = None
    if feature_cfg.use_tfidf:
        if not args.tfidf_model:
            raise ContractViolation("model uses TF-IDF features; pass --tfidf-model")
        tfidf_model = load_tfidf(args.tfidf_model)
    predictions: dict = {}
    scores: dict = {}
    for bundle in bundles:
        label, score = predict(
            model, assemble_features(bundle, feature_cfg, tfidf_model)
        )
        predictions[bundle.id] = label
        scores[bundle.id] = score
    dataio.write_predictions(predictions, args.out, scores)
    print(f"{len(predictions)} predictions written to {args.out}")


def cmd_evaluate(args) -> None:
    predictions = dataio.read_predictions(args.pred)
    gold_tweets = dataio.read_dataset(args.gold)
    _require_labels(gold_tweets, "gold")
    gold = {t.id: t.label for t in gold_tweets}
    name = args.model_name or Path(args.pred).stem
    report = evaluate(predictions, gold, model_name=name)
    _write_json(report.to_dict(), args.out)
    print(
        f"{name}: F1 {report.f1:.4f} "
        f"precision {report.precision:.4f} recall {report.recall:.4f}"
    )


def cmd_sweep(args) -> None:
    cfg = _read_config(args.config)
    norm_cfg = _norm_config(args, cfg)
    hp = _hyperparams(args, cfg)
    grid_raw = _pick(
        args.max_features, _cfg_str(cfg, "sweep", "max_features_grid"), default="6000"
    )
    try:
        grid = [int(v) for v in str(grid_raw).split(",")]
    except ValueError:
        raise ContractViolation(f"bad max-features grid {grid_raw!r}")
    seeds_raw = _pick(args.seeds, _cfg_str(cfg, "sweep", "seeds"))
    if seeds_raw is None:
        seeds = list(DEFAULT_SEEDS)
    else:
        try:
            seeds = [int(v) for v in str(seeds_raw).split(",")]
        except ValueError:
            raise ContractViolation(f"bad seeds list {seeds_raw!r}")
    train_tweets = dataio.read_dataset(args.train)
    val_tweets = dataio.read_dataset(args.val)
    _require_labels(train_tweets, "training")
    _require_labels(val_tweets, "validation")
    configs = [(_feature_config(args, cfg, mf), hp) for mf in grid]
    need_embedding = any(c.use_embedding for c, _ in configs)
    embedder = _embedder(args, cfg)
    train_bundles = _bundles(train_tweets, norm_cfg, embedder, need_embedding)
    val_bundles = _bundles(val_tweets, norm_cfg, embedder, need_embedding)
    rows = sweep(train_bundles, val_bundles, configs, seeds)
    with open(args.out, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(
            ["config", "loss", "max_features", "eta0", "reg_lambda",
             "epochs", "seed", "f1", "error"]
        )
        for row in rows:
            writer.writerow(
                [
                    row.config.describe(),
                    loss_for(row.config).value,
                    row.config.tfidf_max_features,
                    row.hyperparams.eta0,
                    row.hyperparams.reg_lambda,
                    row.hyperparams.epochs,
                    row.seed,
                    "" if row.f1 is None else row.f1,
                    row.error or "",
                ]
            )
    best = rows[0]
    if best.f1 is not None:
        print(
            f"{len(rows)} rows written to {args.out}; best F1 {best.f1:.4f} "
            f"({best.config.describe()}, max_features={best.config.tfidf_max_features}, "
            f"seed={best.seed})"
        )
    else:
        print(f"{len(rows)} rows written to {args.out}; all rows failed")


def cmd_analyze(args) -> None:
    gold_tweets = dataio.read_dataset(args.gold)
    _require_labels(gold_tweets, "gold")
    gold = {t.id: t.label for t in gold_tweets}
    reference_name = Path(args.reference).stem
    reference = evaluate(
        dataio.read_predictions(args.reference), gold, model_name=reference_name
    )
    intersections = []
    for pred_path in args.pred:
        report = evaluate(
            dataio.read_predictions(pred_path), gold, model_name=Path(pred_path).stem
        )
        intersections.append(intersect_errors(report, reference).to_dict())
    histogram = feature_distribution_report(gold_tweets)
    doc = {
        "reference_model": reference_name,
        "intersections": intersections,
        "histogram": histogram.to_dict(),
    }
    _write_json(doc, args.out)
    if args.histogram_csv:
        write_histogram_csv(histogram, args.histogram_csv)
    print(f"analysis of {len(intersections)} model(s) written to {args.out}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tweetsift",
        description="Informative-tweet classification pipeline",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    boolopt = argparse.BooleanOptionalAction

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="INI config file; flags override it")

    norm = argparse.ArgumentParser(add_help=False)
    norm.add_argument(
        "--hashtag-segmentation", action=boolopt, default=None,
        dest="hashtag_segmentation",
    )
    norm.add_argument("--corona-mode", choices=["standard", "disease", "off"])
    norm.add_argument("--strip-emoji", action=boolopt, default=None)
    norm.add_argument("--lowercase", action=boolopt, default=None)

    emb = argparse.ArgumentParser(add_help=False)
    emb.add_argument("--embeddings", help="embedding JSONL (FILE embedder)")
    emb.add_argument("--hash-dim", type=int, help="dimension for the HASH embedder")
    emb.add_argument("--hash-seed", type=int)

    feats = argparse.ArgumentParser(add_help=False)
    feats.add_argument("--use-embedding", action=boolopt, default=None)
    feats.add_argument("--use-tfidf", action=boolopt, default=None)
    feats.add_argument("--use-prob", action=boolopt, default=None)

    hyper = argparse.ArgumentParser(add_help=False)
    hyper.add_argument("--eta0", type=float)
    hyper.add_argument("--reg-lambda", type=float)
    hyper.add_argument("--epochs", type=int)

    p = sub.add_parser("preprocess", parents=[common, norm],
                       help="normalize a dataset TSV")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("fit-tfidf", parents=[common, norm],
                       help="fit and save a TF-IDF model")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--max-features", type=int)
    p.set_defaults(func=cmd_fit_tfidf)

    p = sub.add_parser("hash-embed", parents=[common, norm],
                       help="write deterministic toy embeddings")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dim", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_hash_embed)

    p = sub.add_parser("train", parents=[common, norm, emb, feats, hyper],
                       help="train a linear model")
    p.add_argument("--train", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--loss", choices=["hinge", "logistic"])
    p.add_argument("--max-features", type=int)
    p.add_argument("--tfidf-model", help="load this TF-IDF model instead of fitting")
    p.add_argument("--save-tfidf", help="where to save a freshly fitted TF-IDF model")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", parents=[common, norm, emb],
                       help="label a dataset with a trained model")
    p.add_argument("--model", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--tfidf-model")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("evaluate", parents=[common],
                       help="score predictions against gold labels")
    p.add_argument("--pred", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--model-name")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("sweep", parents=[common, norm, emb, feats, hyper],
                       help="grid of max_features x seeds, ranked by val F1")
    p.add_argument("--train", required=True)
    p.add_argument("--val", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seeds", help="comma-separated, default 1,2,3,4,5")
    p.add_argument("--max-features", help="comma-separated grid, default 6000")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("analyze", parents=[common],
                       help="error intersections and PROB histogram")
    p.add_argument("--gold", required=True)
    p.add_argument("--reference", required=True,
                   help="predictions the others are intersected against")
    p.add_argument("--pred", action="append", required=True,
                   help="repeatable; one predictions file per model")
    p.add_argument("--out", required=True)
    p.add_argument("--histogram-csv")
    p.set_defaults(func=cmd_analyze)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        args.func(args)
    except (TweetsiftError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def console_main() -> None:
    raise SystemExit(main())
