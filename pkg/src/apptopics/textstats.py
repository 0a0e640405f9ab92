"""Per-app text quality measurements: obfuscation, encryption-likeness and
non-English content. These feed the corpus filter and the anomaly flag."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable

from .extract import RawAppFeatures

_HEX_CHARS = set("0123456789abcdefABCDEF")
_BASE64_CHARS = set(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/="
)
_VOWELS = set("aeiouAEIOU")


@dataclass(frozen=True)
class TextQualityFlags:
    non_english_ratio: float
    encrypted_ratio: float
    obfuscated_methods: bool
    obfuscated_xml: bool
    encrypted_present: bool


@dataclass(frozen=True)
class EncryptionThresholds:
    """Knobs of the encrypted-token detector; see is_encrypted_like."""

    hex_min_len: int = 32
    base64_min_len: int = 16
    base64_min_entropy: float = 4.0
    consonant_run_len: int = 5
    unknown_word_min_len: int = 12


DEFAULT_ENCRYPTION = EncryptionThresholds()


class EnglishDictionary:
    """Exact-match lowercase word membership, loaded from a word list file
    (one word per line)."""

    def __init__(self, words: Iterable[str]):
        self._words = frozenset(w.strip().lower() for w in words if w.strip())
        if not self._words:
            raise ValueError("dictionary is empty")

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._words

    def __len__(self) -> int:
        return len(self._words)

    def __iter__(self):
        return iter(self._words)

    @classmethod
    def load(cls, path: Path) -> "EnglishDictionary":
        return cls(Path(path).read_text(encoding="utf-8").splitlines())

    @classmethod
    def load_default(cls) -> "EnglishDictionary":
        text = resources.files("apptopics.data").joinpath("english_words.txt").read_text("utf-8")
        return cls(text.splitlines())


def token_entropy(token: str) -> float:
    """Shannon entropy (bits/char) of the token's character distribution."""
    if not token:
        raise ValueError("token must be non-empty")
    counts = Counter(token)
    n = len(token)
    return -sum((c / n) * math.log2(c / n) for c in counts.values())


def _max_consonant_run(token: str) -> int:
    best = run = 0
    for ch in token:
        if ch.isalpha() and ch not in _VOWELS:
            run += 1
            best = max(best, run)
        else:
            run = 0
    return best


def is_encrypted_like(token: str, dictionary: EnglishDictionary,
                      thresholds: EncryptionThresholds = DEFAULT_ENCRYPTION) -> bool:
    """Heuristic encrypted/encoded-token detector.

    A token is flagged when any of these hold:
      (a) length >= hex_min_len and all characters are hex digits,
      (b) length >= base64_min_len, all characters in the base64 alphabet,
          and character entropy >= base64_min_entropy,
      (c) length >= unknown_word_min_len, not a dictionary word, and it
          contains a consonant run of consonant_run_len or more.
    """
    if not token:
        return False
    n = len(token)
    if n >= thresholds.hex_min_len and all(c in _HEX_CHARS for c in token):
        return True
    if (n >= thresholds.base64_min_len
            and all(c in _BASE64_CHARS for c in token)
            and token_entropy(token) >= thresholds.base64_min_entropy):
        return True
    if (n >= thresholds.unknown_word_min_len
            and token not in dictionary
            and _max_consonant_run(token) >= thresholds.consonant_run_len):
        return True
    return False


def _all_words(rec: RawAppFeatures) -> list[str]:
    return rec.method_words + rec.xml_words + rec.gui_words


def encrypted_ratio(rec: RawAppFeatures, dictionary: EnglishDictionary,
                    thresholds: EncryptionThresholds = DEFAULT_ENCRYPTION) -> float:
    """Fraction of all raw words (three sources, with multiplicity) that are
    encrypted-like; 0.0 for an app with no words."""
    words = _all_words(rec)
    if not words:
        return 0.0
    flagged = sum(1 for w in words if is_encrypted_like(w, dictionary, thresholds))
    return flagged / len(words)


def non_english_ratio(rec: RawAppFeatures, dictionary: EnglishDictionary,
                      min_len: int = 4) -> float:
    """Fraction of raw words of length >= min_len absent from the dictionary.

    Shorter words are ignored: the cleaning pipeline drops them anyway and
    they are dominated by splitting noise.
    """
    words = [w for w in _all_words(rec) if len(w) >= min_len]
    if not words:
        return 0.0
    unknown = sum(1 for w in words if w not in dictionary)
    return unknown / len(words)


def is_obfuscated_source(identifiers: list[str], *, max_len: int = 2,
                         ratio: float = 0.30) -> bool:
    """True when more than `ratio` of the raw identifiers are `max_len`
    characters or shorter (classic a/b/aa renaming). Empty input is clean."""
    if not identifiers:
        return False
    short = sum(1 for ident in identifiers if len(ident) <= max_len)
    return short / len(identifiers) > ratio


def compute_quality_flags(
    rec: RawAppFeatures,
    dictionary: EnglishDictionary,
    thresholds: EncryptionThresholds = DEFAULT_ENCRYPTION,
    *,
    obfuscation_max_len: int = 2,
    obfuscation_ratio: float = 0.30,
) -> TextQualityFlags:
    enc_ratio = encrypted_ratio(rec, dictionary, thresholds)
    return TextQualityFlags(
        non_english_ratio=non_english_ratio(rec, dictionary),
        encrypted_ratio=enc_ratio,
        obfuscated_methods=is_obfuscated_source(
            rec.method_identifiers, max_len=obfuscation_max_len, ratio=obfuscation_ratio),
        obfuscated_xml=is_obfuscated_source(
            rec.xml_words, max_len=obfuscation_max_len, ratio=obfuscation_ratio),
        encrypted_present=enc_ratio > 0.0,
    )
