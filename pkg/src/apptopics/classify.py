"""Topic-to-category mapping, similarity scoring against reference labels,
and the anomaly flag.

Topic numbers are 1-based everywhere in this module, matching how they
appear in label maps and report files.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .textstats import TextQualityFlags
from .topicmodel import TopicAssignment

NON_MATCH_CATEGORY = "Non-Match"

REASON_OBFUSCATED = "obfuscated"
REASON_ENCRYPTED = "encrypted"
REASON_TOPIC_SPREAD = "topic-spread"

# Default category names for the 31-topic configuration, in topic order
# (topic 1 first). Topic 13 is the designated non-match bucket.
DEFAULT_TOPIC_NAMES = (
    "Personalization", "Cards", "Education", "Libraries_and_Demo",
    "Lifestyle", "Tools", "Medical", "Music_and_Audio", "Sports", "Arcade",
    "Transportation", "Business", NON_MATCH_CATEGORY, "Communication",
    "Casual", "Brain", "Health_and_Fitness", "Finance", "Productivity",
    "Books_and_Reference", "Racing", "Photography", "Entertainment",
    "Media_and_Video", "Comics", "Weather", "Travel_and_Local",
    "Sports_Games", "News_and_Magazines", "Shopping", "Social",
)


@dataclass(frozen=True)
class TopicLabel:
    category: str
    malware: bool = False

    def __post_init__(self):
        if not self.category:
            raise ValueError("category name must be non-empty")


@dataclass
class TopicLabelMap:
    entries: dict[int, TopicLabel] = field(default_factory=dict)

    @classmethod
    def default(cls) -> "TopicLabelMap":
        return cls({i + 1: TopicLabel(name) for i, name in enumerate(DEFAULT_TOPIC_NAMES)})

    def category(self, topic: int) -> str:
        if topic not in self.entries:
            raise KeyError(f"topic T{topic} has no label")
        return self.entries[topic].category


@dataclass
class ClassificationResult:
    app_id: str
    assignment: TopicAssignment
    category: str
    anomaly: bool
    anomaly_reasons: list[str]


@dataclass
class SimilarityReport:
    per_topic: dict[int, float]
    average: float


def assign_category(assignment: TopicAssignment, label_map: TopicLabelMap) -> str:
    """Category of the app's primary (highest-contribution) topic."""
    return label_map.category(assignment.primary_topic)


def majority_label_map(
    assignments: Sequence[TopicAssignment],
    reference: Mapping[str, str],
) -> TopicLabelMap:
    """Label each topic with the most frequent reference category among the
    apps whose primary topic it is; ties go alphabetically, topics with no
    apps stay unmapped."""
    by_topic: dict[int, Counter] = defaultdict(Counter)
    for assignment in assignments:
        if assignment.app_id not in reference:
            raise KeyError(f"no reference category for app {assignment.app_id!r}")
        by_topic[assignment.primary_topic][reference[assignment.app_id]] += 1
    entries = {}
    for topic, counts in by_topic.items():
        winner = min(counts.items(), key=lambda item: (-item[1], item[0]))[0]
        entries[topic] = TopicLabel(winner)
    return TopicLabelMap(entries)


def most_frequent_match_similarity(
    assignments: Sequence[TopicAssignment],
    reference: Mapping[str, str],
    label_map: TopicLabelMap,
) -> SimilarityReport:
    """Per-topic percentage of apps whose reference category equals the
    topic's label, and the unweighted mean over scored topics.

    Topics with no apps, topics absent from the label map, and the
    designated non-match category are not scored.
    """
    apps_per_topic: dict[int, int] = defaultdict(int)
    matches_per_topic: dict[int, int] = defaultdict(int)
    for assignment in assignments:
        app_id = assignment.app_id
        if app_id not in reference:
            raise KeyError(f"no reference category for app {app_id!r}")
        topic = assignment.primary_topic
        apps_per_topic[topic] += 1
        if topic in label_map.entries and reference[app_id] == label_map.entries[topic].category:
            matches_per_topic[topic] += 1
    per_topic = {}
    for topic, total in apps_per_topic.items():
        if topic not in label_map.entries:
            continue
        if label_map.entries[topic].category == NON_MATCH_CATEGORY:
            continue
        per_topic[topic] = 100.0 * matches_per_topic[topic] / total
    average = sum(per_topic.values()) / len(per_topic) if per_topic else 0.0
    return SimilarityReport(per_topic=per_topic, average=average)


def flag_anomaly(
    flags: TextQualityFlags,
    theta_row: np.ndarray,
    spread_threshold: float = 8.0,
    min_topics: int = 2,
) -> tuple[bool, list[str]]:
    """Anomaly-candidate test: obfuscation, encryption, and topic spread
    must all be present.

    The spread test looks at the full theta row (percent scale) rather
    than the truncated assignment, so the report cutoff cannot mask it.
    """
    reasons = []
    if flags.obfuscated_methods or flags.obfuscated_xml:
        reasons.append(REASON_OBFUSCATED)
    if flags.encrypted_present:
        reasons.append(REASON_ENCRYPTED)
    spread = int(np.sum(np.asarray(theta_row) * 100.0 >= spread_threshold))
    if spread >= min_topics:
        reasons.append(REASON_TOPIC_SPREAD)
    return len(reasons) == 3, reasons
