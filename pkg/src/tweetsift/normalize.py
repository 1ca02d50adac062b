"""Tweet text normalization.

Raw tweets become token streams here. Two consumers with different
needs share the module: the embedding path wants lightly cleaned
surface tokens (normalize), the TF-IDF path additionally drops
stopwords and punctuation and stems what remains (tfidf_preprocess).

All operations are pure functions of (input, config); nothing in this
module holds state, so everything is safe to call concurrently.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum

from .errors import ContractViolation
from .porter import stem
from .stopwords import is_stopword


class Label(Enum):
    """Gold or predicted class of a tweet."""

    INFORMATIVE = "INFORMATIVE"
    UNINFORMATIVE = "UNINFORMATIVE"


class CoronaMode(Enum):
    """How corona/covid spelling variants are standardized."""

    STANDARD = "standard"   # every variant becomes "coronavirus"
    DISEASE = "disease"     # every variant becomes "coronavirus disease"
    OFF = "off"             # leave the text alone


@dataclass(frozen=True)
class Tweet:
    id: str
    text: str
    label: Label | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise ContractViolation("tweet id must be non-empty")
        if not self.text.strip():
            raise ContractViolation(f"tweet {self.id!r} has empty text")


@dataclass(frozen=True)
class TokenStream:
    """An ordered token sequence tied back to its source tweet."""

    tokens: tuple[str, ...]
    source_id: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if any(not t for t in self.tokens):
            raise ContractViolation(f"empty token in stream {self.source_id!r}")

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class NormalizationConfig:
    hashtag_segmentation: bool = True
    corona_mode: CoronaMode = CoronaMode.STANDARD
    strip_emoji: bool = True
    lowercase: bool = False


# Camel-case boundaries inside a hashtag tail: a lowercase letter
# followed by an uppercase one, or the last uppercase letter of an
# acronym run when a lowercase letter follows ("NHSHeroes" splits
# between "NHS" and "Heroes").
_CAMEL_BOUNDARY = re.compile(r"(?<=[a-z])(?=[A-Z])|(?<=[A-Z])(?=[A-Z][a-z])")


def segment_hashtag(token: str) -> list[str]:
    """Split a camel-cased hashtag into distinct tokens.

    The '#' stays on the first segment: "#HashTag" gives ["#Hash",
    "Tag"]. Hashtags without a case boundary come back unchanged as a
    single-element list.
    """
    if not token.startswith("#"):
        raise ContractViolation(
            f"segment_hashtag expects a token starting with '#', got {token!r}"
        )
    parts = [p for p in _CAMEL_BOUNDARY.split(token[1:]) if p]
    if not parts:
        return [token]
    parts[0] = "#" + parts[0]
    return parts


# Spelling variants recognized by standardize_corona, longest first so
# that "covid19" wins over "covid" at the same position. Matching is
# case-insensitive, left to right, non-overlapping.
_CORONA_VARIANTS = (
    "#corona virus",
    "#coronavirus",
    "#covid-19",
    "#covid_19",
    "#covid 19",
    "#covid19",
    "#covid",
    "corona virus",
    "coronavirus",
    "covid-19",
    "covid 19",
    "covid19",
    "covid",
)
_CORONA_RE = re.compile(
    "|".join(re.escape(v) for v in sorted(_CORONA_VARIANTS, key=len, reverse=True)),
    re.IGNORECASE,
)


def standardize_corona(text: str, mode: CoronaMode) -> str:
    """Replace every recognized corona/covid variant with one form."""
    if mode is CoronaMode.OFF:
        return text
    replacement = "coronavirus" if mode is CoronaMode.STANDARD else "coronavirus disease"
    return _CORONA_RE.sub(replacement, text)


# Unicode blocks treated as emoji, kept as an explicit table so the
# behavior is identical on every platform and Python version:
#   U+1F1E6..U+1F1FF  regional indicator symbols (flag pairs)
#   U+1F300..U+1F5FF  miscellaneous symbols and pictographs
#   U+1F600..U+1F64F  emoticons
#   U+1F680..U+1F6FF  transport and map symbols
#   U+1F900..U+1F9FF  supplemental symbols and pictographs
_EMOJI_CLASS = (
    "\U0001F1E6-\U0001F1FF"
    "\U0001F300-\U0001F5FF"
    "\U0001F600-\U0001F64F"
    "\U0001F680-\U0001F6FF"
    "\U0001F900-\U0001F9FF"
)
_EMOJI_RE = re.compile(
    # Keycap sequences take their base digit/#/* with them as a unit;
    # a digit on its own never matches (U+20E3 is required).
    "[0-9#*]️?⃣"
    # Emoji runs, including ZWJ-joined sequences, with optional
    # presentation selectors attached to each element.
    f"|[{_EMOJI_CLASS}][︎️]?(?:‍[{_EMOJI_CLASS}][︎️]?)*"
    # Orphaned presentation selectors and keycap marks render nothing.
    "|[︎️⃣]"
)


def strip_emoji(text: str) -> str:
    """Remove emoji while preserving all other characters in order."""
    return _EMOJI_RE.sub("", text)


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def _trim_punct(raw: str) -> str:
    """Strip edge punctuation, keeping a leading '#' or '@' marker."""
    start, end = 0, len(raw)
    while start < end and raw[start] not in "#@" and _is_punct(raw[start]):
        start += 1
    floor = start + 1 if start < end and raw[start] in "#@" else start
    while end > floor and _is_punct(raw[end - 1]):
        end -= 1
    return raw[start:end]


def tokenize(text: str) -> list[str]:
    """Split on whitespace and trim edge punctuation from each token."""
    return [t for t in (_trim_punct(raw) for raw in text.split()) if t]


def normalize(tweet: Tweet, config: NormalizationConfig) -> TokenStream:
    """Run the full normalization pipeline on one tweet.

    Order is fixed: corona standardization, emoji stripping (if
    enabled), whitespace tokenization, hashtag segmentation (if
    enabled), then optional lowercasing.
    """
    text = standardize_corona(tweet.text, config.corona_mode)
    if config.strip_emoji:
        text = strip_emoji(text)
    tokens = tokenize(text)
    if config.hashtag_segmentation:
        segmented: list[str] = []
        for token in tokens:
            if token.startswith("#"):
                segmented.extend(segment_hashtag(token))
            else:
                segmented.append(token)
        tokens = segmented
    if config.lowercase:
        tokens = [t.lower() for t in tokens]
    return TokenStream(tokens=tuple(tokens), source_id=tweet.id)


def tfidf_preprocess(stream: TokenStream) -> TokenStream:
    """Reduce a token stream to stemmed content words.

    Punctuation-only tokens and interior punctuation go first, then
    stopwords, then each survivor is stemmed. Stemming can itself
    produce a stopword ("wills" stems to "will"), so the list is
    checked again afterwards. The result may be empty.
    """
    kept: list[str] = []
    for token in stream.tokens:
        bare = "".join(ch for ch in token if not _is_punct(ch))
        if not bare or is_stopword(token) or is_stopword(bare):
            continue
        stemmed = stem(bare)
        if is_stopword(stemmed):
            continue
        kept.append(stemmed)
    return TokenStream(tokens=tuple(kept), source_id=stream.source_id)
