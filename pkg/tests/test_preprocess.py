"""Cleaning pipeline: per-token stages, corpus pruning, app filtering."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apptopics.preprocess import (
    REASON_ENCRYPTED,
    REASON_FEW_KEYWORDS,
    REASON_NON_ENGLISH,
    PipelineThresholds,
    ProcessedAppFeatures,
    clean_app,
    compute_support,
    drop_short,
    filter_apps,
    lemmatize,
    normalize,
    preprocess_corpus,
    prune_by_support,
    rough_split,
)
from apptopics.textstats import EnglishDictionary, TextQualityFlags

DICT = EnglishDictionary([
    "center", "house", "bridge", "near", "library", "child", "dinner",
    "beach", "box", "class", "site", "weather", "forecast", "rain",
    "performance", "apartment", "waterfall", "gallery", "tour",
])

THRESHOLDS = PipelineThresholds()

CLEAN_FLAGS = TextQualityFlags(0.0, 0.0, False, False, False)


def flags_with(non_english=0.0, encrypted=0.0):
    return TextQualityFlags(non_english, encrypted, False, False, encrypted > 0)


def make_processed(sha, tokens, package="pkg"):
    return ProcessedAppFeatures(sha256=sha, package_id=package,
                                method_tokens=sorted(tokens))


class TestTokenStages:
    def test_normalize(self):
        assert normalize(["Banana", "apple", "banana"]) == ["apple", "banana"]
        assert normalize([]) == []
        assert normalize(["ZEBRA"]) == ["zebra"]

    def test_drop_short(self):
        assert drop_short(["the", "dinner"]) == ["dinner"]
        assert drop_short(["fabs"]) == ["fabs"]
        assert drop_short(["abc", "ab", "a"]) == []

    def test_rough_split(self):
        assert rough_split(["access$000"]) == ["access"]
        assert rough_split(["I'm", "mp3"]) == ["I", "m", "mp3"]
        assert rough_split(["42", "a-b"]) == ["a", "b"]

    @given(st.lists(st.text(alphabet="abcDEF", max_size=10), max_size=20))
    def test_normalize_idempotent(self, tokens):
        once = normalize(tokens)
        assert normalize(once) == once

    @given(st.lists(st.text(alphabet="abcd", max_size=8), max_size=20))
    def test_drop_short_idempotent_and_monotone(self, tokens):
        once = drop_short(tokens)
        assert drop_short(once) == once
        assert len(once) <= len(tokens)


class TestLemmatize:
    @pytest.mark.parametrize("token,expected", [
        ("children", "child"),
        ("dinner", "dinner"),
        ("centers", "center"),
        ("libraries", "library"),
        ("houses", "house"),
        ("beaches", "beach"),
        ("boxes", "box"),
        ("classes", "class"),
        ("sites", "site"),          # -es must not strip to "sit"
        ("nearest", "near"),
        ("these", "these"),
        ("swiss", "swiss"),
        ("performances", "performance"),
    ])
    def test_examples(self, token, expected):
        assert lemmatize(token, DICT) == expected

    def test_unknown_stem_passes_through(self):
        assert lemmatize("varargs", DICT) == "varargs"
        assert lemmatize("restaurantsamppubs", DICT) == "restaurantsamppubs"


class TestSupport:
    def corpus(self):
        return [
            make_processed("a" * 64, ["zebra", "common"]),
            make_processed("b" * 64, ["common"]),
            make_processed("c" * 64, ["common", "rare"]),
            make_processed("d" * 64, ["common"]),
            make_processed("e" * 64, ["common"]),
        ]

    def test_document_frequency(self):
        stats = compute_support(self.corpus())
        assert stats.support("zebra") == pytest.approx(0.2)
        assert stats.support("common") == pytest.approx(1.0)
        assert stats.support("missing") == 0.0

    def test_empty_corpus_rejected(self):
        with pytest.raises(ValueError):
            compute_support([])

    def test_prune_at_cutoff_removes(self):
        corpus = [make_processed("a" * 64, ["tenth"])] + [
            make_processed(str(i) * 64, [f"filler{i}"]) for i in range(9)
        ]
        stats = compute_support(corpus)
        assert stats.support("tenth") == pytest.approx(0.10)
        pruned = prune_by_support(corpus, stats, cutoff=0.10)
        assert pruned[0].method_tokens == []   # support == cutoff goes away

    def test_prune_below_cutoff_kept(self):
        corpus = [make_processed("a" * 64, ["rare"])] + [
            make_processed(str(i) * 64, ["filler"]) for i in range(11)
        ]
        stats = compute_support(corpus)
        assert stats.support("rare") < 0.10
        pruned = prune_by_support(corpus, stats, cutoff=0.10)
        assert pruned[0].method_tokens == ["rare"]

    def test_single_app_corpus_fully_pruned(self):
        corpus = [make_processed("a" * 64, ["alpha", "beta"])]
        stats = compute_support(corpus)
        pruned = prune_by_support(corpus, stats, cutoff=0.10)
        assert pruned[0].method_tokens == []

    @given(st.lists(st.lists(st.sampled_from("abcdefgh"), max_size=6), min_size=1,
                    max_size=10))
    def test_prune_idempotent(self, rows):
        corpus = [make_processed(format(i, "064d"), set(tokens))
                  for i, tokens in enumerate(rows)]
        stats = compute_support(corpus)
        once = prune_by_support(corpus, stats, 0.5)
        twice = prune_by_support(once, stats, 0.5)
        assert [a.method_tokens for a in twice] == [a.method_tokens for a in once]


class TestFilterApps:
    def test_too_few_keywords(self):
        app = make_processed("a" * 64, [f"token{i}" for i in range(9)])
        kept, removed = filter_apps([app], {"a" * 64: CLEAN_FLAGS}, THRESHOLDS)
        assert not kept
        assert removed[0].reasons == [REASON_FEW_KEYWORDS]

    def test_ten_keywords_survive(self):
        app = make_processed("a" * 64, [f"token{i}" for i in range(10)])
        kept, removed = filter_apps([app], {"a" * 64: CLEAN_FLAGS}, THRESHOLDS)
        assert kept and not removed

    def test_non_english_boundary(self):
        app = make_processed("a" * 64, [f"token{i}" for i in range(12)])
        _, removed = filter_apps([app], {"a" * 64: flags_with(non_english=0.12)}, THRESHOLDS)
        assert removed[0].reasons == [REASON_NON_ENGLISH]

    def test_encrypted_boundary_inclusive(self):
        app = make_processed("a" * 64, [f"token{i}" for i in range(12)])
        _, removed = filter_apps([app], {"a" * 64: flags_with(encrypted=0.51)}, THRESHOLDS)
        assert removed[0].reasons == [REASON_ENCRYPTED]

    def test_multiple_reasons_reported(self):
        app = make_processed("a" * 64, ["only"])
        _, removed = filter_apps(
            [app], {"a" * 64: flags_with(non_english=0.5, encrypted=0.9)}, THRESHOLDS)
        assert removed[0].reasons == [REASON_FEW_KEYWORDS, REASON_NON_ENGLISH,
                                      REASON_ENCRYPTED]


def raw_app(sha, methods=(), xml=(), gui=(), package="pkg"):
    return (sha, package, list(methods), list(xml), list(gui))


class TestPipeline:
    def test_empty_corpus(self):
        corpus, removed = preprocess_corpus([], {}, DICT)
        assert corpus == [] and removed == []

    def test_stage_order_and_stemming(self):
        sha = "a" * 64
        corpus, _ = preprocess_corpus(
            [raw_app(sha, methods=["route", "Route", "the", "libraries"],
                     xml=["RestaurantsampPubs"] + [f"filler{i}" for i in range(8)])],
            {sha: CLEAN_FLAGS}, DICT, prune=False)
        app = corpus[0]
        assert "rout" in app.method_tokens
        assert "librari" in app.method_tokens
        assert "the" not in app.method_tokens
        assert "restaurantsamppub" in app.xml_tokens

    def test_gui_dictionary_filter(self):
        sha = "a" * 64
        corpus, _ = preprocess_corpus(
            [raw_app(sha, methods=[f"filler{i}" for i in range(10)],
                     gui=["fabs", "weather"])],
            {sha: CLEAN_FLAGS}, DICT, prune=False)
        assert corpus[0].gui_tokens == ["weather"]

    def test_token_count_monotone_per_stage(self):
        sha = "a" * 64
        raw = ["Banana", "banana", "apple", "ab", "libraries", "access$000"]
        cleaned = clean_app(sha, "pkg", raw, [], [], DICT, THRESHOLDS)
        assert len(cleaned.method_tokens) <= len(raw)

    def test_support_fixed_point_after_pipeline(self):
        apps = []
        flags = {}
        for i in range(12):
            sha = format(i, "064x")
            tokens = [f"token{i}x{j}" for j in range(12)]
            if i < 6:
                tokens.append("sharedword")
            apps.append(raw_app(sha, methods=tokens))
            flags[sha] = CLEAN_FLAGS
        corpus, _ = preprocess_corpus(apps, flags, DICT, prune=True)
        assert corpus
        stats = compute_support(corpus)
        cutoff = THRESHOLDS.support_cutoff
        over = [t for t in stats.doc_frequency if stats.support(t) >= cutoff]
        assert over == []

    def test_filter_then_reprune_interaction(self):
        # app 11 relies on a token whose support crosses the cutoff only
        # after small apps are removed; the loop must converge regardless
        apps = []
        flags = {}
        for i in range(10):
            sha = format(i, "064x")
            apps.append(raw_app(sha, methods=[f"small{i}"]))
            flags[sha] = CLEAN_FLAGS
        big_sha = format(10, "064x")
        apps.append(raw_app(big_sha, methods=[f"bigtoken{j}" for j in range(15)]))
        flags[big_sha] = CLEAN_FLAGS
        corpus, removed = preprocess_corpus(apps, flags, DICT, prune=True)
        stats = compute_support(corpus) if corpus else None
        if stats:
            assert all(stats.support(t) < 0.10 for t in stats.doc_frequency)
        assert len(removed) >= 10
