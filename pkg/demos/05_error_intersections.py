# Where do two models make the same mistakes?
# ============================================
#
# Error intersections ask, for each of a model's false positives (or
# negatives), whether a second model tripped over the same tweet. High
# overlap means the models fail on the same inputs and ensembling them
# buys little; low overlap means their errors are complementary.
# The same analysis pass also histograms the PROB feature per class.

import tempfile
from pathlib import Path

from tweetsift import (
    FeatureConfig,
    Hyperparams,
    assemble_features,
    evaluate,
    feature_distribution_report,
    fit_tfidf,
    intersect_errors,
    loss_for,
    predict,
    train,
    write_histogram_csv,
)
from tweetsift.toydata import corpus_bundles, split_bundles, synthetic_corpus

tweets = synthetic_corpus(n=800, seed=3)
bundles = corpus_bundles(tweets)
train_b, _, test_b = split_bundles(bundles, seed=3)
tfidf = fit_tfidf([b.stream for b in train_b], max_features=64)
gold = {b.id: b.label for b in test_b}

reports = {}
for config in (
    FeatureConfig(False, True, False, 64),   # SVM baseline
    FeatureConfig(True, True, True, 64),     # fusion head
):
    dataset = [(assemble_features(b, config, tfidf), b.label) for b in train_b]
    model = train(dataset, loss_for(config), seed=1, feature_config=config)
    predictions = {
        b.id: predict(model, assemble_features(b, config, tfidf))[0] for b in test_b
    }
    reports[config.describe()] = evaluate(predictions, gold, model_name=config.describe())

for name, report in reports.items():
    c = report.confusion
    print(f"{name:>15}: F1 {report.f1:.4f}  fp {c.fp}  fn {c.fn}")

# The intersection is directional: it is measured against the BASE
# model's error sets, so base and reference are not interchangeable.
print()
base = reports["TFIDF"]
reference = reports["EMB+TFIDF+PROB"]
cell = intersect_errors(base, reference)
print(f"of {base.model_name}'s errors, {reference.model_name} shares:")
print(f"  false positives: {cell.shared_fp_pct:.1f}%")
print(f"  false negatives: {cell.shared_fn_pct:.1f}%")

reverse = intersect_errors(reference, base)
print(f"of {reference.model_name}'s errors, {base.model_name} shares:")
print(f"  false positives: {reverse.shared_fp_pct:.1f}%")
print(f"  false negatives: {reverse.shared_fn_pct:.1f}%")

# PROB histogram per class, on the fifth-root display scale. The mass
# of the informative class sits far to the right.
histogram = feature_distribution_report([t for t in tweets])
print()
print("PROB distribution (transformed, 20 bins):")
for label_name, counts in histogram.to_dict()["counts"].items():
    bar = "".join("#" if c else "." for c in counts)
    print(f"  {label_name:>13} {bar}")

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "prob_histogram.csv"
    write_histogram_csv(histogram, out)
    print(f"\nwrote {len(out.read_text().splitlines())} CSV rows to {out.name}")
