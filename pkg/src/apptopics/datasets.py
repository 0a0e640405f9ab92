"""On-disk formats: dataset tables, quality flags, label maps, reference
labels, classification output, model container, and plot data.

Everything is UTF-8 text — tab-separated values with a header row, or
JSON for the model and plot containers. Empty token fields serialize as
the literal ``Null`` (token lists are lowercase, so the capitalized
marker cannot collide). All writes go through a temp-file-then-rename so
a failed run never leaves a partial file behind.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .classify import SimilarityReport, TopicLabel, TopicLabelMap
from .preprocess import ProcessedAppFeatures, RemovalRecord
from .textstats import TextQualityFlags
from .topicmodel import LdaConfig, LdaModel, TopicAssignment, TopicMapEntry, Vocabulary

NULL_FIELD = "Null"
MODEL_FORMAT_VERSION = 1

DATASET_HEADER = ("sha256", "package_id", "method_words", "xml_words", "gui_words")
FLAGS_HEADER = ("sha256", "package_id", "non_english_ratio", "encrypted_ratio",
                "obfuscated_methods", "obfuscated_xml", "encrypted_present")
REMOVAL_HEADER = ("sha256", "package_id", "reasons")
CLASSIFICATION_HEADER = ("app_id", "primary_topic", "category", "topics",
                         "anomaly", "reasons")


@dataclass
class DatasetRow:
    """One app row of a dataset table; token fields are plain word lists."""

    sha256: str
    package_id: str
    method_words: list[str] = field(default_factory=list)
    xml_words: list[str] = field(default_factory=list)
    gui_words: list[str] = field(default_factory=list)


def atomic_write_text(path: Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def _join_field(words: Sequence[str]) -> str:
    return " ".join(words) if words else NULL_FIELD


def _split_field(text: str) -> list[str]:
    return [] if text == NULL_FIELD else text.split(" ")


def _format_bool(value: bool) -> str:
    return "true" if value else "false"


def _parse_bool(text: str) -> bool:
    if text == "true":
        return True
    if text == "false":
        return False
    raise ValueError(f"not a boolean field: {text!r}")


def _parse_tsv(path: Path, expected_header: tuple[str, ...]) -> list[list[str]]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise ValueError(f"{path}: empty file")
    header = tuple(lines[0].split("\t"))
    if header != expected_header:
        raise ValueError(f"{path}: unexpected header {header!r}")
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        fields = line.split("\t")
        if len(fields) != len(expected_header):
            raise ValueError(f"{path}:{i}: expected {len(expected_header)} columns")
        rows.append(fields)
    return rows


def write_dataset(path: Path, rows: Sequence[DatasetRow]) -> None:
    lines = ["\t".join(DATASET_HEADER)]
    for row in rows:
        lines.append("\t".join((
            row.sha256, row.package_id,
            _join_field(row.method_words),
            _join_field(row.xml_words),
            _join_field(row.gui_words),
        )))
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_dataset(path: Path) -> list[DatasetRow]:
    return [
        DatasetRow(sha256=f[0], package_id=f[1],
                   method_words=_split_field(f[2]),
                   xml_words=_split_field(f[3]),
                   gui_words=_split_field(f[4]))
        for f in _parse_tsv(path, DATASET_HEADER)
    ]


def processed_to_row(app: ProcessedAppFeatures) -> DatasetRow:
    return DatasetRow(sha256=app.sha256, package_id=app.package_id,
                      method_words=list(app.method_tokens),
                      xml_words=list(app.xml_tokens),
                      gui_words=list(app.gui_tokens))


def write_quality_flags(path: Path, flags: Mapping[str, tuple[str, TextQualityFlags]]) -> None:
    """`flags` maps sha256 -> (package_id, TextQualityFlags)."""
    lines = ["\t".join(FLAGS_HEADER)]
    for sha256 in sorted(flags):
        package_id, f = flags[sha256]
        lines.append("\t".join((
            sha256, package_id,
            repr(f.non_english_ratio), repr(f.encrypted_ratio),
            _format_bool(f.obfuscated_methods), _format_bool(f.obfuscated_xml),
            _format_bool(f.encrypted_present),
        )))
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_quality_flags(path: Path) -> dict[str, TextQualityFlags]:
    out = {}
    for f in _parse_tsv(path, FLAGS_HEADER):
        out[f[0]] = TextQualityFlags(
            non_english_ratio=float(f[2]), encrypted_ratio=float(f[3]),
            obfuscated_methods=_parse_bool(f[4]), obfuscated_xml=_parse_bool(f[5]),
            encrypted_present=_parse_bool(f[6]),
        )
    return out


def write_removal_report(path: Path, removals: Sequence[RemovalRecord]) -> None:
    lines = ["\t".join(REMOVAL_HEADER)]
    for r in removals:
        lines.append("\t".join((r.sha256, r.package_id, ",".join(r.reasons))))
    atomic_write_text(path, "\n".join(lines) + "\n")


def _format_topic(topic: int) -> str:
    return f"T{topic}"


def _parse_topic(text: str) -> int:
    raw = text[1:] if text.startswith("T") else text
    topic = int(raw)
    if topic < 1:
        raise ValueError(f"topic numbers are 1-based: {text!r}")
    return topic


def write_label_map(path: Path, label_map: TopicLabelMap) -> None:
    lines = ["topic\tcategory\tmalware"]
    for topic in sorted(label_map.entries):
        entry = label_map.entries[topic]
        lines.append("\t".join((_format_topic(topic), entry.category,
                                _format_bool(entry.malware))))
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_label_map(path: Path) -> TopicLabelMap:
    rows = _parse_tsv(path, ("topic", "category", "malware"))
    return TopicLabelMap({
        _parse_topic(f[0]): TopicLabel(category=f[1], malware=_parse_bool(f[2]))
        for f in rows
    })


def read_reference_labels(path: Path) -> dict[str, str]:
    return {f[0]: f[1] for f in _parse_tsv(path, ("app_id", "category"))}


def write_reference_labels(path: Path, reference: Mapping[str, str]) -> None:
    lines = ["app_id\tcategory"]
    for app_id in sorted(reference):
        lines.append(f"{app_id}\t{reference[app_id]}")
    atomic_write_text(path, "\n".join(lines) + "\n")


def format_contributions(contributions: Sequence[tuple[int, float]]) -> str:
    if not contributions:
        return NULL_FIELD
    return ";".join(f"{_format_topic(t)}:{pct:.3f}" for t, pct in contributions)


def parse_contributions(text: str) -> list[tuple[int, float]]:
    if text == NULL_FIELD:
        return []
    out = []
    for part in text.split(";"):
        topic, _, pct = part.partition(":")
        out.append((_parse_topic(topic), float(pct)))
    return out


def write_classification(path: Path, results) -> None:
    lines = ["\t".join(CLASSIFICATION_HEADER)]
    for r in results:
        lines.append("\t".join((
            r.app_id,
            _format_topic(r.assignment.primary_topic),
            r.category,
            format_contributions(r.assignment.contributions),
            _format_bool(r.anomaly),
            ",".join(r.anomaly_reasons) if r.anomaly_reasons else NULL_FIELD,
        )))
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_classification_assignments(path: Path) -> list[TopicAssignment]:
    rows = _parse_tsv(path, CLASSIFICATION_HEADER)
    return [
        TopicAssignment(app_id=f[0], contributions=parse_contributions(f[3]))
        for f in rows
    ]


def write_topic_keys(path: Path, model: LdaModel, words_per_topic: int = 20) -> None:
    from .topicmodel import top_words
    alpha = model.config.effective_alpha
    lines = ["topic\talpha\ttop_words"]
    for topic in range(model.config.n_topics):
        best = top_words(model, topic, words_per_topic)
        lines.append("\t".join((
            _format_topic(topic + 1), f"{alpha:.6f}",
            " ".join(w for w, _ in best),
        )))
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_composition(path: Path, model: LdaModel) -> None:
    """One row per document: app id then one percentage column per topic."""
    k = model.config.n_topics
    header = ["app_id"] + [_format_topic(t + 1) for t in range(k)]
    lines = ["\t".join(header)]
    theta = model.theta
    for d, app_id in enumerate(model.doc_ids):
        cells = [app_id] + [f"{100.0 * theta[d, t]:.6f}" for t in range(k)]
        lines.append("\t".join(cells))
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_similarity_report(path: Path, report: SimilarityReport) -> None:
    lines = ["topic\tsimilarity_pct"]
    for topic in sorted(report.per_topic):
        lines.append(f"{_format_topic(topic)}\t{report.per_topic[topic]:.2f}")
    lines.append(f"Average\t{report.average:.2f}")
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_topic_map(path: Path, entries: Sequence[TopicMapEntry]) -> None:
    payload = {
        "topics": [
            {"topic": _format_topic(e.topic), "prevalence": e.prevalence,
             "x": e.x, "y": e.y}
            for e in entries
        ]
    }
    atomic_write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def save_model(path: Path, model: LdaModel) -> None:
    cfg = model.config
    payload = {
        "format_version": MODEL_FORMAT_VERSION,
        "config": {
            "n_topics": cfg.n_topics, "alpha": cfg.alpha, "beta": cfg.beta,
            "n_iterations": cfg.n_iterations, "burn_in": cfg.burn_in,
            "seed": cfg.seed,
        },
        "doc_ids": model.doc_ids,
        "doc_lengths": model.doc_lengths,
        "vocabulary": model.vocab.id_to_token,
        "topic_word_counts": model.topic_word_counts.tolist(),
        "doc_topic_counts": model.doc_topic_counts.tolist(),
        "topic_word_avg": model.topic_word_avg.tolist(),
        "doc_topic_avg": model.doc_topic_avg.tolist(),
        "log_likelihood_trace": model.log_likelihood_trace,
    }
    atomic_write_text(path, json.dumps(payload, sort_keys=True) + "\n")


def load_model(path: Path) -> LdaModel:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    version = payload.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise ValueError(f"unsupported model format version: {version!r}")
    cfg = LdaConfig(**payload["config"])
    tokens = payload["vocabulary"]
    vocab = Vocabulary(token_to_id={t: i for i, t in enumerate(tokens)},
                       id_to_token=list(tokens))
    return LdaModel(
        config=cfg,
        vocab=vocab,
        doc_ids=list(payload["doc_ids"]),
        doc_lengths=list(payload["doc_lengths"]),
        topic_word_counts=np.asarray(payload["topic_word_counts"], dtype=np.int64),
        doc_topic_counts=np.asarray(payload["doc_topic_counts"], dtype=np.int64),
        topic_word_avg=np.asarray(payload["topic_word_avg"], dtype=float),
        doc_topic_avg=np.asarray(payload["doc_topic_avg"], dtype=float),
        log_likelihood_trace=list(payload["log_likelihood_trace"]),
    )
