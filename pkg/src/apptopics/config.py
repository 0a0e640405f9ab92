"""Pipeline configuration: a flat ``key = value`` text file.

Lines starting with ``#`` and blank lines are ignored; unknown keys are
errors. Relative paths are resolved against the config file's directory.
See docs/formats.md for the full key list.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from pathlib import Path

from .preprocess import PipelineThresholds
from .textstats import EncryptionThresholds
from .topicmodel import LdaConfig


@dataclass
class PipelineConfig:
    input_root: Path | None = None
    output_dir: Path = Path("out")
    dictionary: Path | None = None          # None -> bundled word list
    label_map: Path | None = None
    reference_labels: Path | None = None
    thresholds: PipelineThresholds = field(default_factory=PipelineThresholds)
    lda: LdaConfig = field(default_factory=LdaConfig)
    encryption: EncryptionThresholds = field(default_factory=EncryptionThresholds)
    obfuscated_max_len: int = 2
    obfuscated_short_ratio: float = 0.30
    ocr: str = "sidecar"
    ocr_command: str = ""
    prune: bool = True
    extra_stopwords: tuple[str, ...] = ()
    topic_min_pct: float = 1.0
    topic_max_n: int = 4
    spread_threshold: float = 8.0
    spread_min_topics: int = 2


_PATH_KEYS = {"input_root", "output_dir", "dictionary", "label_map", "reference_labels"}
_THRESHOLD_KEYS = {
    "min_token_len": int, "support_cutoff": float, "min_keywords": int,
    "max_non_english": float, "max_encrypted": float,
}
_LDA_KEYS = {
    "n_topics": int, "alpha": float, "beta": float,
    "n_iterations": int, "burn_in": int, "seed": int,
}
_ENCRYPTION_KEYS = {
    "hex_min_len": int, "base64_min_len": int, "base64_min_entropy": float,
    "consonant_run_len": int, "unknown_word_min_len": int,
}
_TOP_KEYS = {
    "obfuscated_max_len": int, "obfuscated_short_ratio": float,
    "topic_min_pct": float, "topic_max_n": int,
    "spread_threshold": float, "spread_min_topics": int,
}


def _parse_bool(key: str, value: str) -> bool:
    if value.lower() in ("true", "yes", "1"):
        return True
    if value.lower() in ("false", "no", "0"):
        return False
    raise ValueError(f"config key {key}: expected a boolean, got {value!r}")


def parse_config(path: Path) -> PipelineConfig:
    path = Path(path)
    base = path.parent
    raw: dict[str, str] = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        raw[key.strip()] = value.strip()

    cfg = PipelineConfig()
    thresholds: dict = {}
    lda: dict = {}
    encryption: dict = {}
    for key, value in raw.items():
        if key in _PATH_KEYS:
            setattr(cfg, key, (base / value).resolve() if value else None)
        elif key in _THRESHOLD_KEYS:
            thresholds[key] = _THRESHOLD_KEYS[key](value)
        elif key in _LDA_KEYS:
            lda[key] = _LDA_KEYS[key](value)
        elif key in _ENCRYPTION_KEYS:
            encryption[key] = _ENCRYPTION_KEYS[key](value)
        elif key in _TOP_KEYS:
            setattr(cfg, key, _TOP_KEYS[key](value))
        elif key == "ocr":
            if value not in ("sidecar", "command"):
                raise ValueError(f"config key ocr: expected sidecar or command, got {value!r}")
            cfg.ocr = value
        elif key == "ocr_command":
            cfg.ocr_command = value
        elif key == "prune":
            cfg.prune = _parse_bool(key, value)
        elif key == "extra_stopwords":
            cfg.extra_stopwords = tuple(w.strip() for w in value.split(",") if w.strip())
        else:
            raise ValueError(f"{path}: unknown config key {key!r}")

    if thresholds:
        cfg.thresholds = PipelineThresholds(**{
            f.name: thresholds.get(f.name, getattr(cfg.thresholds, f.name))
            for f in fields(PipelineThresholds)
        })
    if lda:
        cfg.lda = LdaConfig(**{
            f.name: lda.get(f.name, getattr(cfg.lda, f.name))
            for f in fields(LdaConfig)
        })
    if encryption:
        cfg.encryption = EncryptionThresholds(**{
            f.name: encryption.get(f.name, getattr(cfg.encryption, f.name))
            for f in fields(EncryptionThresholds)
        })

    for key in ("dictionary", "label_map", "reference_labels"):
        value = getattr(cfg, key)
        if value is not None and not Path(value).exists():
            raise FileNotFoundError(f"config key {key}: file not found: {value}")
    return cfg
