"""Synthetic corpora with planted signals.

The generator writes tweets whose informativeness correlates with two
partially independent channels: digit density (the PROB feature picks
this up) and a planted vocabulary split (TF-IDF picks this up). The
channels are noisy on purpose, so no single feature reaches the
ceiling and adding one measurably helps. Used by the demos and the
self-contained experiments; real data never flows through here.
"""

from __future__ import annotations

import numpy as np

from .embeddings import hash_embed
from .errors import ContractViolation
from .models import FeatureBundle
from .normalize import (
    Label,
    NormalizationConfig,
    Tweet,
    normalize,
    tfidf_preprocess,
)
from .features import prob_numeric

INFO_TERMS = (
    "confirmed", "cases", "deaths", "hospital", "outbreak", "lockdown",
    "quarantine", "update", "report", "total", "toll", "positive",
    "tested", "vaccine", "officials", "emergency", "region", "spread",
    "curve", "surge",
)

UNINF_TERMS = (
    "love", "miss", "friends", "funny", "movie", "bored", "coffee",
    "weekend", "dog", "music", "party", "game", "sleep", "beach",
    "birthday", "selfie", "dinner", "sunshine", "puppy", "meme",
)

# Neutral words appearing in both classes; a mix of stopwords (dropped
# on the TF-IDF path but still visible to PROB and the embedder) and
# content words that carry no class signal.
FILLER_TERMS = (
    "the", "a", "to", "in", "of", "and", "is", "are", "this", "that",
    "people", "time", "day", "week", "world", "city", "news", "today",
    "place", "thing",
)

NEUTRAL_HASHTAGS = ("#StayHome", "#WashYourHands", "#SundayThoughts")


def synthetic_corpus(
    n: int = 2000,
    seed: int = 0,
    vocab_fidelity: float = 0.75,
    digit_rate_info: float = 0.7,
    digit_rate_uninf: float = 0.12,
) -> list[Tweet]:
    """Generate n labeled tweets, class-balanced, order shuffled.

    vocab_fidelity is the chance a planted vocabulary word comes from
    the tweet's own class pool rather than the opposite one; the digit
    rates set how often a tweet of each class carries numeric tokens.
    """
    if n < 2:
        raise ContractViolation("need at least 2 tweets for a two-class corpus")
    rng = np.random.default_rng(seed)
    labels = np.array(
        [Label.INFORMATIVE] * (n // 2) + [Label.UNINFORMATIVE] * (n - n // 2)
    )
    rng.shuffle(labels)
    tweets = []
    for i, label in enumerate(labels):
        informative = label is Label.INFORMATIVE
        tokens = list(rng.choice(FILLER_TERMS, size=rng.integers(4, 9)))
        own, other = (
            (INFO_TERMS, UNINF_TERMS) if informative else (UNINF_TERMS, INFO_TERMS)
        )
        for _ in range(rng.integers(1, 4)):
            pool = own if rng.random() < vocab_fidelity else other
            tokens.append(str(rng.choice(pool)))
        digit_rate = digit_rate_info if informative else digit_rate_uninf
        if rng.random() < digit_rate:
            for _ in range(rng.integers(1, 3)):
                tokens.append(str(rng.integers(10, 100000)))
        if rng.random() < 0.15:
            tokens.append(str(rng.choice(NEUTRAL_HASHTAGS)))
        rng.shuffle(tokens)
        tweets.append(Tweet(id=f"s{i:05d}", text=" ".join(tokens), label=label))
    return tweets


def corpus_bundles(
    tweets: list[Tweet],
    config: NormalizationConfig | None = None,
    embed_dim: int = 12,
    embed_seed: int = 0,
    noise_scale: float = 0.35,
    noise_seed: int = 0,
) -> list[FeatureBundle]:
    """Run the full feature pipeline over tweets into FeatureBundles.

    The embedding is the deterministic hash embedder over the
    normalized stream, optionally blurred with Gaussian noise so that
    it behaves like a weak signal instead of a lossless token index.
    """
    if config is None:
        config = NormalizationConfig()
    noise_rng = np.random.default_rng(noise_seed)
    bundles = []
    for tweet in tweets:
        stream = normalize(tweet, config)
        embedding = hash_embed(stream, embed_dim, embed_seed).vector
        if noise_scale > 0:
            embedding = embedding + noise_rng.normal(0.0, noise_scale, embed_dim)
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


def split_bundles(
    bundles: list[FeatureBundle],
    fractions: tuple[float, float, float] = (0.7, 0.1, 0.2),
    seed: int = 0,
) -> tuple[list[FeatureBundle], list[FeatureBundle], list[FeatureBundle]]:
    """Shuffled train/validation/test split by fraction."""
    if abs(sum(fractions) - 1.0) > 1e-9 or any(f < 0 for f in fractions):
        raise ContractViolation("fractions must be non-negative and sum to 1")
    order = np.random.default_rng(seed).permutation(len(bundles))
    n_train = round(fractions[0] * len(bundles))
    n_val = round(fractions[1] * len(bundles))
    train = [bundles[i] for i in order[:n_train]]
    val = [bundles[i] for i in order[n_train : n_train + n_val]]
    test = [bundles[i] for i in order[n_train + n_val :]]
    return train, val, test
