# Seed sweeps and ensemble comparison
# ====================================
#
# Single-run F1 numbers on small data are noise. The sweep trains
# every (feature config, hyperparams, seed) cell and ranks rows by
# validation F1, which is how the ensemble ordering is established.

from collections import defaultdict

from tweetsift import FeatureConfig, Hyperparams, sweep
from tweetsift.toydata import corpus_bundles, split_bundles, synthetic_corpus

tweets = synthetic_corpus(n=800, seed=0)
train_b, val_b, _ = split_bundles(corpus_bundles(tweets), seed=0)

configs = [
    (FeatureConfig(True, False, False, 64), Hyperparams()),   # embedding only
    (FeatureConfig(True, False, True, 64), Hyperparams()),    # + PROB
    (FeatureConfig(True, True, False, 64), Hyperparams()),    # + TFIDF
    (FeatureConfig(True, True, True, 64), Hyperparams()),     # + both
]

rows = sweep(train_b, val_b, configs, seeds=(1, 2, 3, 4, 5))

print(f"{'config':>15} {'seed':>4} {'val F1':>8}")
for row in rows:
    print(f"{row.config.describe():>15} {row.seed:>4} {row.f1:>8.4f}")

# Per-config means over the five seeds; the fused model should come
# out on top, and PROB alone should already beat the bare embedding.
by_config = defaultdict(list)
for row in rows:
    by_config[row.config.describe()].append(row.f1)

print()
print(f"{'config':>15} {'mean F1':>8}")
for name, scores in sorted(by_config.items(), key=lambda kv: -sum(kv[1])):
    print(f"{name:>15} {sum(scores) / len(scores):>8.4f}")
