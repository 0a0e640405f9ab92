"""Latent Dirichlet allocation fitted by collapsed Gibbs sampling.

The sampler is sequential over token positions within a sweep (required
for collapsed-Gibbs correctness) and fully deterministic given the seed:
all randomness comes from a counter-based Philox generator, one uniform
per token position per sweep. Posterior means for the topic-word (phi)
and document-topic (theta) matrices are computed from sufficient
statistics averaged over the post-burn-in sweeps.
"""

from __future__ import annotations

import hashlib
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

log = logging.getLogger(__name__)

Document = tuple[str, list[str]]


@dataclass(frozen=True)
class LdaConfig:
    n_topics: int = 31
    alpha: float | None = None      # per-topic; defaults to 5.0 / n_topics
    beta: float = 0.01
    n_iterations: int = 1000
    burn_in: int = 800
    seed: int = 20210527

    def __post_init__(self):
        if self.n_topics < 2:
            raise ValueError("n_topics must be at least 2")
        if self.alpha is not None and self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        if self.n_iterations <= 0:
            raise ValueError("n_iterations must be positive")
        if not 0 <= self.burn_in < self.n_iterations:
            raise ValueError("burn_in must be in [0, n_iterations)")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 unsigned bits")

    @property
    def effective_alpha(self) -> float:
        return self.alpha if self.alpha is not None else 5.0 / self.n_topics


@dataclass
class Vocabulary:
    token_to_id: dict[str, int]
    id_to_token: list[str]

    def __len__(self) -> int:
        return len(self.id_to_token)


def build_vocabulary(docs: Sequence[Document]) -> Vocabulary:
    """Assign dense ids 0..V-1 to the corpus tokens in sorted order."""
    if not docs:
        raise ValueError("corpus is empty")
    tokens = sorted({t for _, body in docs for t in body})
    return Vocabulary(
        token_to_id={t: i for i, t in enumerate(tokens)},
        id_to_token=tokens,
    )


@dataclass
class LdaModel:
    config: LdaConfig
    vocab: Vocabulary
    doc_ids: list[str]
    doc_lengths: list[int]
    topic_word_counts: np.ndarray        # K x V, final-sweep integers
    doc_topic_counts: np.ndarray         # D x K, final-sweep integers
    topic_word_avg: np.ndarray           # K x V, post-burn-in mean
    doc_topic_avg: np.ndarray            # D x K, post-burn-in mean
    log_likelihood_trace: list[float] = field(default_factory=list)

    @property
    def n_topics(self) -> int:
        return self.config.n_topics

    @property
    def phi(self) -> np.ndarray:
        """Topic-word posterior mean, rows summing to one."""
        beta = self.config.beta
        v = len(self.vocab)
        totals = self.topic_word_avg.sum(axis=1, keepdims=True)
        return (self.topic_word_avg + beta) / (totals + v * beta)

    @property
    def theta(self) -> np.ndarray:
        """Document-topic posterior mean, rows summing to one."""
        alpha = self.config.effective_alpha
        k = self.config.n_topics
        lengths = np.asarray(self.doc_lengths, dtype=float)[:, None]
        return (self.doc_topic_avg + alpha) / (lengths + k * alpha)

    def theta_row(self, app_id: str) -> np.ndarray | None:
        try:
            d = self.doc_ids.index(app_id)
        except ValueError:
            return None
        return self.theta[d]


SweepHook = Callable[[int, np.ndarray, np.ndarray], None]


def _instant_log_likelihood(word_arr, doc_arr, n_kw, n_k, n_dk, n_d, alpha, beta, v):
    phi = (np.asarray(n_kw, dtype=float) + beta) / (np.asarray(n_k, dtype=float)[:, None] + v * beta)
    theta = (np.asarray(n_dk, dtype=float) + alpha) / (np.asarray(n_d, dtype=float)[:, None] + len(n_k) * alpha)
    probs = theta @ phi                   # D x V
    return float(np.log(probs[doc_arr, word_arr]).sum())


def fit_gibbs(docs: Sequence[Document], cfg: LdaConfig,
              sweep_hook: SweepHook | None = None,
              rng: np.random.Generator | None = None) -> LdaModel:
    """Fit the model on (id, tokens) documents.

    Raises on an empty document (naming it) and warns when the vocabulary
    is smaller than the topic count. Identical (docs, cfg) always yields a
    bit-identical model. `sweep_hook(sweep, topic_word, doc_topic)` is
    called after every sweep with the live integer count matrices;
    `rng` overrides the seeded Philox stream (testing hook).
    """
    for doc_id, body in docs:
        if not body:
            raise ValueError(f"document {doc_id!r} is empty")
    vocab = build_vocabulary(docs)
    k = cfg.n_topics
    v = len(vocab)
    if v < k:
        log.warning("vocabulary size %d is below the topic count %d", v, k)

    doc_ids = [doc_id for doc_id, _ in docs]
    word_ids: list[int] = []
    doc_of: list[int] = []
    for d, (_, body) in enumerate(docs):
        for token in body:
            word_ids.append(vocab.token_to_id[token])
            doc_of.append(d)
    n_positions = len(word_ids)
    n_docs = len(docs)
    alpha = cfg.effective_alpha
    beta = cfg.beta
    v_beta = v * beta

    gen = rng if rng is not None else np.random.Generator(np.random.Philox(cfg.seed))

    z = [int(t) for t in gen.integers(0, k, size=n_positions)]
    n_kw = [[0] * v for _ in range(k)]
    n_k = [0] * k
    n_dk = [[0] * k for _ in range(n_docs)]
    n_d = [0] * n_docs
    for pos in range(n_positions):
        t, w, d = z[pos], word_ids[pos], doc_of[pos]
        n_kw[t][w] += 1
        n_k[t] += 1
        n_dk[d][t] += 1
        n_d[d] += 1

    acc_kw = np.zeros((k, v), dtype=float)
    acc_dk = np.zeros((n_docs, k), dtype=float)
    n_averaged = 0
    trace: list[float] = []
    topics = range(k)
    word_arr = np.asarray(word_ids)
    doc_arr = np.asarray(doc_of)

    for sweep in range(1, cfg.n_iterations + 1):
        uniforms = gen.random(n_positions).tolist()
        for pos in range(n_positions):
            w = word_ids[pos]
            d = doc_of[pos]
            t_old = z[pos]
            # exclude this position's own count
            n_kw[t_old][w] -= 1
            n_k[t_old] -= 1
            row_dk = n_dk[d]
            row_dk[t_old] -= 1

            cumulative = 0.0
            weights = []
            for t in topics:
                cumulative += (row_dk[t] + alpha) * (n_kw[t][w] + beta) / (n_k[t] + v_beta)
                weights.append(cumulative)
            threshold = uniforms[pos] * cumulative
            t_new = 0
            while weights[t_new] < threshold and t_new < k - 1:
                t_new += 1

            z[pos] = t_new
            n_kw[t_new][w] += 1
            n_k[t_new] += 1
            row_dk[t_new] += 1

        if sweep > cfg.burn_in:
            acc_kw += np.asarray(n_kw, dtype=float)
            acc_dk += np.asarray(n_dk, dtype=float)
            n_averaged += 1
        trace.append(_instant_log_likelihood(
            word_arr, doc_arr, n_kw, n_k, n_dk, n_d, alpha, beta, v))
        if sweep_hook is not None:
            sweep_hook(sweep, np.asarray(n_kw), np.asarray(n_dk))

    acc_kw /= n_averaged
    acc_dk /= n_averaged
    return LdaModel(
        config=cfg,
        vocab=vocab,
        doc_ids=doc_ids,
        doc_lengths=n_d,
        topic_word_counts=np.asarray(n_kw, dtype=np.int64),
        doc_topic_counts=np.asarray(n_dk, dtype=np.int64),
        topic_word_avg=acc_kw,
        doc_topic_avg=acc_dk,
        log_likelihood_trace=trace,
    )


def infer_theta(model: LdaModel, tokens: list[str], seed: int,
                n_iterations: int = 100, burn_in: int = 50) -> np.ndarray:
    """Fold a new document into a fitted model with phi held fixed.

    Tokens outside the model vocabulary are ignored; with no known tokens
    the result is the uniform prior row (alpha-only counts).
    """
    k = model.config.n_topics
    alpha = model.config.effective_alpha
    known = [model.vocab.token_to_id[t] for t in tokens if t in model.vocab.token_to_id]
    if not known:
        return np.full(k, 1.0 / k)
    phi = model.phi
    gen = np.random.Generator(np.random.Philox(seed))
    z = [int(t) for t in gen.integers(0, k, size=len(known))]
    counts = [0] * k
    for t in z:
        counts[t] += 1
    acc = np.zeros(k)
    n_averaged = 0
    for sweep in range(1, n_iterations + 1):
        uniforms = gen.random(len(known)).tolist()
        for pos, w in enumerate(known):
            t_old = z[pos]
            counts[t_old] -= 1
            cumulative = 0.0
            weights = []
            for t in range(k):
                cumulative += (counts[t] + alpha) * phi[t, w]
                weights.append(cumulative)
            threshold = uniforms[pos] * cumulative
            t_new = 0
            while weights[t_new] < threshold and t_new < k - 1:
                t_new += 1
            z[pos] = t_new
            counts[t_new] += 1
        if sweep > burn_in:
            acc += np.asarray(counts, dtype=float)
            n_averaged += 1
    acc /= n_averaged
    return (acc + alpha) / (len(known) + k * alpha)


def derive_doc_seed(base_seed: int, doc_id: str) -> int:
    """Stable per-document seed for fold-in inference."""
    digest = hashlib.sha256(f"{base_seed}:{doc_id}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass
class TopicAssignment:
    """Up to four top topics of one app, percentages descending, each at
    least the cutoff; topic numbers are 1-based."""

    app_id: str
    contributions: list[tuple[int, float]]

    @property
    def primary_topic(self) -> int:
        if not self.contributions:
            raise ValueError(f"no topic above the cutoff for {self.app_id!r}")
        return self.contributions[0][0]


def top_topics(theta_row: np.ndarray, min_pct: float = 1.0,
               max_n: int = 4) -> list[tuple[int, float]]:
    """Strongest topics of one theta row as (1-based topic number, percent),
    sorted descending, ties to the lower topic number, truncated to max_n,
    entries below min_pct dropped."""
    total = float(np.sum(theta_row))
    if not math.isclose(total, 1.0, rel_tol=0, abs_tol=1e-6):
        raise ValueError(f"theta row sums to {total}, expected 1")
    ranked = sorted(
        ((i + 1, float(p) * 100.0) for i, p in enumerate(theta_row)),
        key=lambda item: (-item[1], item[0]),
    )
    return [(num, pct) for num, pct in ranked[:max_n] if pct >= min_pct]


def top_words(model: LdaModel, topic: int, n: int) -> list[tuple[str, float]]:
    """The n highest-probability tokens of a topic (0-based index),
    descending, ties by token order."""
    if not 0 <= topic < model.config.n_topics:
        raise ValueError(f"topic index out of range: {topic}")
    if n <= 0:
        return []
    row = model.phi[topic]
    order = sorted(range(len(row)), key=lambda w: (-row[w], model.vocab.id_to_token[w]))
    return [(model.vocab.id_to_token[w], float(row[w])) for w in order[:n]]


def corpus_log_likelihood(model: LdaModel, docs: Sequence[Document]) -> float:
    """Sum over token positions of log p(word | theta, phi)."""
    phi = model.phi
    theta = model.theta
    ll = 0.0
    for doc_id, body in docs:
        d = model.doc_ids.index(doc_id)
        probs = theta[d] @ phi
        for token in body:
            ll += math.log(probs[model.vocab.token_to_id[token]])
    return ll


def jensen_shannon_divergence(p: np.ndarray, q: np.ndarray) -> float:
    """Base-2 JS divergence; 0 for identical rows, 1 for disjoint support."""
    m = (p + q) / 2.0
    def kl(a, b):
        mask = a > 0
        return float(np.sum(a[mask] * np.log2(a[mask] / b[mask])))
    return 0.5 * kl(p, m) + 0.5 * kl(q, m)


def _classical_mds_2d(distances: np.ndarray) -> np.ndarray:
    """Classical MDS of a symmetric distance matrix into 2 dimensions."""
    k = distances.shape[0]
    j = np.eye(k) - np.full((k, k), 1.0 / k)
    b = -0.5 * j @ (distances ** 2) @ j
    eigenvalues, eigenvectors = np.linalg.eigh(b)
    order = np.argsort(eigenvalues)[::-1][:2]
    coords = np.zeros((k, 2))
    for axis, idx in enumerate(order):
        ev = eigenvalues[idx]
        if ev > 0:
            coords[:, axis] = eigenvectors[:, idx] * math.sqrt(ev)
    return coords


@dataclass
class TopicMapEntry:
    topic: int                 # 1-based
    prevalence: float
    x: float
    y: float


def emit_topic_map(model: LdaModel) -> list[TopicMapEntry]:
    """Per-topic marginal prevalence plus 2-D coordinates from classical
    MDS of the pairwise JS divergences between topic-word rows."""
    k = model.config.n_topics
    if k < 2:
        raise ValueError("topic map needs at least 2 topics")
    theta = model.theta
    lengths = np.asarray(model.doc_lengths, dtype=float)
    prevalence = (theta * lengths[:, None]).sum(axis=0) / lengths.sum()
    phi = model.phi
    distances = np.zeros((k, k))
    for a in range(k):
        for b_idx in range(a + 1, k):
            div = jensen_shannon_divergence(phi[a], phi[b_idx])
            distances[a, b_idx] = distances[b_idx, a] = div
    coords = _classical_mds_2d(distances)
    return [
        TopicMapEntry(topic=t + 1, prevalence=float(prevalence[t]),
                      x=float(coords[t, 0]), y=float(coords[t, 1]))
        for t in range(k)
    ]
