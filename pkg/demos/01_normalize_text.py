# Normalizing noisy tweets
# =========================
#
# Tweets arrive full of camel-cased hashtags, a dozen spellings of
# "covid", and emoji. This walk-through takes a handful of raw texts
# through each normalization stage so you can see exactly what the
# classifier will later be fed.

from tweetsift import (
    CoronaMode,
    NormalizationConfig,
    Tweet,
    normalize,
    segment_hashtag,
    standardize_corona,
    strip_emoji,
    tfidf_preprocess,
)

# Hashtag segmentation splits at case boundaries. The '#' stays on the
# first piece, and acronym runs hold together until lowercase resumes.
for tag in ("#HashTag", "#StayHomeSaveLives", "#NHSHeroes", "#covid"):
    print(f"{tag:<24} -> {segment_hashtag(tag)}")

print()

# Spelling standardization. Every recognized variant collapses to one
# canonical form; DISEASE mode uses the two-word phrase instead.
sentence = "New COVID-19 cases as the Corona Virus spreads #covid19"
print("original:", sentence)
print("standard:", standardize_corona(sentence, CoronaMode.STANDARD))
print("disease: ", standardize_corona(sentence, CoronaMode.DISEASE))
print("off:     ", standardize_corona(sentence, CoronaMode.OFF))

print()

# Emoji stripping removes pictographs, flags, keycaps and their joiner
# plumbing, but never a plain letter or digit.
for text in ("stay safe \U0001F637", "totals 120 \U0001F4C8\U0001F4C8", "1️⃣ case"):
    print(f"{text!r} -> {strip_emoji(text)!r}")

print()

# The full pipeline: corona standardization, emoji stripping,
# tokenization, hashtag segmentation, optional lowercasing, in that
# order. The config is a frozen value, so a stream is reproducible
# from (tweet, config) alone.
config = NormalizationConfig(
    hashtag_segmentation=True,
    corona_mode=CoronaMode.STANDARD,
    strip_emoji=True,
    lowercase=False,
)
tweet = Tweet("demo1", "#StayHome COVID-19 update: 523 new cases \U0001F637")
stream = normalize(tweet, config)
print("tokens:", list(stream.tokens))

# The TF-IDF path runs one more pass: drop punctuation and stopwords,
# then stem. "cases" becomes "case"; "coronavirus" loses its final
# letter the way classic suffix-stripping stemmers do.
print("tf-idf tokens:", list(tfidf_preprocess(stream).tokens))
