# Training the fusion classifier
# ===============================
#
# The fusion head concatenates [embedding | TF-IDF | PROB] into one
# vector and trains a logistic head on top; the baseline is a hinge
# SVM on TF-IDF alone. Real embeddings come from an external exporter
# file, but the built-in hash embedder is enough to run everything
# end to end, so this demo is self-contained.

import tempfile
from pathlib import Path

from tweetsift import (
    FeatureConfig,
    Hyperparams,
    assemble_features,
    evaluate,
    fit_tfidf,
    load_model,
    loss_for,
    predict,
    save_model,
    train,
)
from tweetsift.toydata import corpus_bundles, split_bundles, synthetic_corpus

# A planted-signal corpus: informative tweets carry more digits and a
# different vocabulary. 600 tweets keeps this instant.
tweets = synthetic_corpus(n=600, seed=7)
bundles = corpus_bundles(tweets, embed_dim=12)
train_b, val_b, test_b = split_bundles(bundles, seed=7)
print(f"{len(train_b)} train / {len(val_b)} val / {len(test_b)} test")

tfidf = fit_tfidf([b.stream for b in train_b], max_features=64)

results = {}
for config in (
    FeatureConfig(use_embedding=False, use_tfidf=True, use_prob=False, tfidf_max_features=64),
    FeatureConfig(use_embedding=True, use_tfidf=True, use_prob=True, tfidf_max_features=64),
):
    loss = loss_for(config)  # HINGE for the baseline, LOGISTIC for fusion
    dataset = [(assemble_features(b, config, tfidf), b.label) for b in train_b]
    model = train(dataset, loss, seed=1, hyperparams=Hyperparams(epochs=20), feature_config=config)

    predictions = {
        b.id: predict(model, assemble_features(b, config, tfidf))[0] for b in test_b
    }
    gold = {b.id: b.label for b in test_b}
    report = evaluate(predictions, gold, model_name=config.describe())
    results[config.describe()] = model
    c = report.confusion
    print(
        f"{config.describe():>15} ({loss.value:8}): "
        f"F1 {report.f1:.4f}  P {report.precision:.4f}  R {report.recall:.4f}  "
        f"[tp {c.tp} fp {c.fp} fn {c.fn} tn {c.tn}]"
    )

# Models serialize to a single JSON file with fixed key order and
# 17-significant-digit floats, so save -> load -> save is
# byte-identical and diffs stay meaningful under version control.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "fusion.json"
    save_model(results["EMB+TFIDF+PROB"], path)
    reloaded = load_model(path)
    print(
        f"\nround trip: {len(reloaded.weights)} weights, "
        f"bias {reloaded.bias:.6f}, seed {reloaded.seed}, "
        f"features {reloaded.feature_config.describe()}"
    )
