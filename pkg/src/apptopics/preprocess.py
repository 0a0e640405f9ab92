"""Corpus cleaning: normalization, short-token and high-support pruning,
lemmatization, stemming, and removal of uninteresting apps.

Stage order per app list: rough split on non-alphanumerics -> normalize
(lowercase, sort, dedup) -> drop short tokens -> lemmatize -> stem ->
dedup again. Corpus-global stages follow: support pruning and app
filtering, iterated together until neither changes anything, so the final
corpus has no token at or above the support cutoff.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Mapping

from .stemming import porter_stem
from .textstats import EnglishDictionary, TextQualityFlags

log = logging.getLogger(__name__)

_NON_ALNUM_RE = re.compile(r"[^0-9A-Za-z]+")

REASON_FEW_KEYWORDS = "too-few-keywords"
REASON_NON_ENGLISH = "non-english"
REASON_ENCRYPTED = "encrypted"


@dataclass(frozen=True)
class PipelineThresholds:
    min_token_len: int = 4
    support_cutoff: float = 0.10
    min_keywords: int = 10
    max_non_english: float = 0.10
    max_encrypted: float = 0.51

    def __post_init__(self):
        if not 0 < self.support_cutoff <= 1:
            raise ValueError("support_cutoff must be in (0, 1]")
        for name in ("min_token_len", "min_keywords"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        for name in ("max_non_english", "max_encrypted"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class ProcessedAppFeatures:
    """Clean, per-source token sets for one app (sorted, duplicate-free)."""

    sha256: str
    package_id: str
    method_tokens: list[str] = field(default_factory=list)
    xml_tokens: list[str] = field(default_factory=list)
    gui_tokens: list[str] = field(default_factory=list)

    def all_tokens(self) -> list[str]:
        return self.method_tokens + self.xml_tokens + self.gui_tokens

    def keyword_count(self) -> int:
        return len(self.method_tokens) + len(self.xml_tokens) + len(self.gui_tokens)


@dataclass
class RemovalRecord:
    sha256: str
    package_id: str
    reasons: list[str]


@dataclass
class CorpusStats:
    n_docs: int
    doc_frequency: dict[str, int]

    def support(self, token: str) -> float:
        return self.doc_frequency.get(token, 0) / self.n_docs


# irregular noun forms handled ahead of the suffix rules
_LEMMA_EXCEPTIONS = {
    "children": "child", "men": "man", "women": "woman", "mice": "mouse",
    "feet": "foot", "teeth": "tooth", "geese": "goose", "oxen": "ox",
    "people": "person", "indices": "index", "matrices": "matrix",
    "vertices": "vertex", "analyses": "analysis", "crises": "crisis",
    "lives": "life", "knives": "knife", "wives": "wife", "leaves": "leaf",
    "halves": "half", "shelves": "shelf", "wolves": "wolf", "loaves": "loaf",
}

_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")


def lemmatize(token: str, dictionary: EnglishDictionary) -> str:
    """Rule-based inflection reduction for lowercase tokens.

    Irregular forms come from a fixed exception table; otherwise plural
    suffixes (-ies, -es after sibilants, -s) and the superlative -est are
    stripped when the remaining stem is a dictionary word. Anything else
    passes through unchanged.
    """
    if token in _LEMMA_EXCEPTIONS:
        return _LEMMA_EXCEPTIONS[token]
    if token.endswith("ies") and len(token) > 3:
        stem = token[:-3] + "y"
        if len(stem) >= 3 and stem in dictionary:
            return stem
    if token.endswith("es"):
        stem = token[:-2]
        if len(stem) >= 3 and stem.endswith(_SIBILANT_ENDINGS) and stem in dictionary:
            return stem
    if token.endswith("est"):
        stem = token[:-3]
        if len(stem) >= 4 and stem in dictionary:
            return stem
    if token.endswith("s") and not token.endswith("ss"):
        stem = token[:-1]
        if len(stem) >= 3 and stem in dictionary:
            return stem
    return token


def rough_split(tokens: list[str]) -> list[str]:
    """Split on non-alphanumeric runs; drop empty and purely numeric parts."""
    out = []
    for token in tokens:
        for part in _NON_ALNUM_RE.split(token):
            if part and not part.isdigit():
                out.append(part)
    return out


def normalize(tokens: list[str]) -> list[str]:
    """Lowercase, sort, and deduplicate."""
    return sorted({t.lower() for t in tokens})


def drop_short(tokens: list[str], min_len: int = 4) -> list[str]:
    return [t for t in tokens if len(t) >= min_len]


def _clean_token_list(tokens: list[str], dictionary: EnglishDictionary,
                      thresholds: PipelineThresholds,
                      english_only: bool = False) -> list[str]:
    tokens = normalize(rough_split(tokens))
    tokens = drop_short(tokens, thresholds.min_token_len)
    if english_only:
        tokens = [t for t in tokens if t in dictionary]
    tokens = [lemmatize(t, dictionary) for t in tokens]
    tokens = [porter_stem(t) if t.isalpha() else t for t in tokens]
    return sorted(set(tokens))


def clean_app(sha256: str, package_id: str, method_words: list[str],
              xml_words: list[str], gui_words: list[str],
              dictionary: EnglishDictionary,
              thresholds: PipelineThresholds) -> ProcessedAppFeatures:
    """Per-app stages of the pipeline (everything before corpus pruning).

    GUI tokens additionally pass a dictionary filter: OCR output is noisy
    and non-word fragments would otherwise survive to the model.
    """
    return ProcessedAppFeatures(
        sha256=sha256,
        package_id=package_id,
        method_tokens=_clean_token_list(method_words, dictionary, thresholds),
        xml_tokens=_clean_token_list(xml_words, dictionary, thresholds),
        gui_tokens=_clean_token_list(gui_words, dictionary, thresholds,
                                     english_only=True),
    )


def compute_support(corpus: list[ProcessedAppFeatures]) -> CorpusStats:
    """Document frequency of each token over the union of an app's lists."""
    if not corpus:
        raise ValueError("corpus is empty")
    freq: dict[str, int] = {}
    for app in corpus:
        for token in set(app.all_tokens()):
            freq[token] = freq.get(token, 0) + 1
    return CorpusStats(n_docs=len(corpus), doc_frequency=freq)


def prune_by_support(corpus: list[ProcessedAppFeatures], stats: CorpusStats,
                     cutoff: float) -> list[ProcessedAppFeatures]:
    """Remove every token whose support is at or above the cutoff from all
    three lists of every app."""
    def keep(tokens: list[str]) -> list[str]:
        return [t for t in tokens if stats.support(t) < cutoff]

    return [
        ProcessedAppFeatures(
            sha256=app.sha256,
            package_id=app.package_id,
            method_tokens=keep(app.method_tokens),
            xml_tokens=keep(app.xml_tokens),
            gui_tokens=keep(app.gui_tokens),
        )
        for app in corpus
    ]


def filter_apps(
    corpus: list[ProcessedAppFeatures],
    flags: Mapping[str, TextQualityFlags],
    thresholds: PipelineThresholds,
) -> tuple[list[ProcessedAppFeatures], list[RemovalRecord]]:
    """Drop apps that are too small, too non-English, or too encrypted.

    Quality flags are measured on the raw (pre-pipeline) features; the
    keyword count on the processed ones. Apps without flags are assumed
    clean on the raw criteria.
    """
    kept: list[ProcessedAppFeatures] = []
    removed: list[RemovalRecord] = []
    for app in corpus:
        reasons = []
        if app.keyword_count() < thresholds.min_keywords:
            reasons.append(REASON_FEW_KEYWORDS)
        app_flags = flags.get(app.sha256)
        if app_flags is not None:
            if app_flags.non_english_ratio >= thresholds.max_non_english:
                reasons.append(REASON_NON_ENGLISH)
            if app_flags.encrypted_ratio >= thresholds.max_encrypted:
                reasons.append(REASON_ENCRYPTED)
        if reasons:
            removed.append(RemovalRecord(app.sha256, app.package_id, reasons))
        else:
            kept.append(app)
    return kept, removed


def preprocess_corpus(
    raw_corpus: list[tuple[str, str, list[str], list[str], list[str]]],
    flags: Mapping[str, TextQualityFlags],
    dictionary: EnglishDictionary,
    thresholds: PipelineThresholds | None = None,
    *,
    prune: bool = True,
) -> tuple[list[ProcessedAppFeatures], list[RemovalRecord]]:
    """Run the full cleaning pipeline over a raw corpus.

    `raw_corpus` rows are (sha256, package_id, method_words, xml_words,
    gui_words). Support pruning can be disabled for single-app or tiny
    corpora, where every token trivially exceeds the cutoff.

    Pruning and app filtering interact (removing apps changes support,
    removing tokens changes keyword counts), so the two are repeated until
    a pass changes nothing.
    """
    thresholds = thresholds or PipelineThresholds()
    corpus = [
        clean_app(sha, pkg, methods, xml, gui, dictionary, thresholds)
        for sha, pkg, methods, xml, gui in raw_corpus
    ]
    removed_all: list[RemovalRecord] = []
    while True:
        if prune and corpus:
            stats = compute_support(corpus)
            corpus = prune_by_support(corpus, stats, thresholds.support_cutoff)
        corpus, removed = filter_apps(corpus, flags, thresholds)
        removed_all.extend(removed)
        if not removed:
            break
    return corpus, removed_all
