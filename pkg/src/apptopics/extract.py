"""Raw feature extraction from decompiled app directories.

Three sources are scanned per app: method names from ``*.smali`` files,
string values from ``strings.xml`` resources, and text recovered from
image files through an OCR adapter. Output is deterministic: files are
visited in lexicographic order of their relative path, lines in file
order, so two scans of the same tree produce identical records.
"""

from __future__ import annotations

import logging
import re
import shutil
import subprocess
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Protocol

log = logging.getLogger(__name__)

_SHA256_RE = re.compile(r"^[0-9a-f]{64}$")
_METHOD_LINE_RE = re.compile(r"\.method")
_XML_VALUE_RE = re.compile(r">([^>]*)</")

# Android / Java boilerplate removed from split method names. Matching is
# case-insensitive; the table is stored lowercased.
CODE_STOPWORDS = frozenset({
    "$", "_", "-", "<clinit>", "<init>",
    "abstract", "assert", "boolean", "break", "bridge", "byte", "case",
    "catch", "char", "class", "const", "constructor", "continue", "create",
    "declared", "default", "do", "double", "else", "enum", "execute",
    "extends", "false", "final", "finally", "float", "for", "get", "goto",
    "has", "if", "implements", "import", "instanceof", "int", "interface",
    "iterator", "long", "native", "new", "next", "null", "on", "package",
    "private", "protected", "public", "return", "run", "set", "short",
    "static", "super", "switch", "synchronized", "synthetic", "this",
    "throw", "throws", "to", "transient", "true", "try", "value", "void",
    "volatile", "while",
    "all", "button", "click", "down", "drawable", "drop", "from", "icon",
    "item", "layout", "menu", "string", "title", "view",
})

_IMAGE_MAGIC = (
    b"\x89PNG\r\n\x1a\n",
    b"\xff\xd8\xff",
    b"GIF87a",
    b"GIF89a",
    b"BM",
)


@dataclass(frozen=True)
class AppDirRef:
    """One decompiled app: its directory, apk digest and application id."""

    root_path: Path
    sha256: str
    package_id: str

    def __post_init__(self):
        if not _SHA256_RE.fullmatch(self.sha256):
            raise ValueError(f"not a lowercase sha256 hex digest: {self.sha256!r}")
        if not self.package_id:
            raise ValueError("package_id must be non-empty")


@dataclass
class RawAppFeatures:
    """Unprocessed token lists for one app, straight off the scanners."""

    app: AppDirRef
    method_identifiers: list[str] = field(default_factory=list)
    method_words: list[str] = field(default_factory=list)
    xml_words: list[str] = field(default_factory=list)
    gui_words: list[str] = field(default_factory=list)
    smali_file_count: int = 0
    xml_file_count: int = 0
    image_file_count: int = 0


@dataclass(frozen=True)
class StopwordTable:
    entries: frozenset[str]

    @classmethod
    def default(cls) -> "StopwordTable":
        return cls(CODE_STOPWORDS)

    @classmethod
    def extended(cls, extra: Iterable[str]) -> "StopwordTable":
        return cls(CODE_STOPWORDS | {w.lower() for w in extra if w})


class OcrAdapter(Protocol):
    def read_text(self, image_path: Path) -> str: ...

    def validate(self) -> None: ...


class SidecarOcr:
    """Reads pre-extracted text from ``<image>.txt`` next to each image."""

    def read_text(self, image_path: Path) -> str:
        sidecar = Path(str(image_path) + ".txt")
        if sidecar.is_file():
            return _read_text_lenient(sidecar) or ""
        return ""

    def validate(self) -> None:
        return None


class CommandOcr:
    """Runs an external command with the image path as its sole argument."""

    def __init__(self, command: str):
        if not command:
            raise ValueError("OCR command must be non-empty")
        self.command = command

    def validate(self) -> None:
        if shutil.which(self.command) is None:
            raise FileNotFoundError(f"OCR command not found: {self.command}")

    def read_text(self, image_path: Path) -> str:
        try:
            proc = subprocess.run(
                [self.command, str(image_path)],
                capture_output=True, timeout=60,
            )
        except (OSError, subprocess.TimeoutExpired) as exc:
            log.warning("OCR failed on %s: %s", image_path, exc)
            return ""
        if proc.returncode != 0:
            log.warning("OCR exited %d on %s; skipped", proc.returncode, image_path)
            return ""
        return proc.stdout.decode("utf-8", errors="replace")


def make_ocr_adapter(mode: str, command: str | None = None) -> OcrAdapter:
    if mode == "sidecar":
        return SidecarOcr()
    if mode == "command":
        return CommandOcr(command or "")
    raise ValueError(f"unknown OCR mode: {mode!r}")


def _read_text_lenient(path: Path) -> str | None:
    """UTF-8 first, Latin-1 fallback; None when the file cannot be read."""
    try:
        data = path.read_bytes()
    except OSError as exc:
        log.warning("unreadable file skipped: %s (%s)", path, exc)
        return None
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        try:
            return data.decode("latin-1")
        except UnicodeDecodeError:
            log.warning("undecodable file skipped: %s", path)
            return None


def _walk_sorted(root: Path) -> list[Path]:
    return sorted((p for p in root.rglob("*") if p.is_file()),
                  key=lambda p: p.relative_to(root).as_posix())


def is_image_file(path: Path) -> bool:
    """Header-magic probe for PNG/JPEG/GIF/BMP/WebP."""
    try:
        with open(path, "rb") as fh:
            head = fh.read(12)
    except OSError:
        return False
    if head[:4] == b"RIFF" and head[8:12] == b"WEBP":
        return True
    return any(head.startswith(m) for m in _IMAGE_MAGIC)


def split_identifier(identifier: str) -> list[str]:
    """Split a method name into lowercase words.

    Underscores are deleted first, then the name is cut at every
    lowercase-to-uppercase boundary; digits stay attached to the segment
    they follow. Joining the result back together gives the identifier
    lowercased with underscores removed.
    """
    s = identifier.replace("_", "")
    if not s:
        return []
    parts = []
    start = 0
    for i in range(len(s) - 1):
        if s[i].islower() and s[i + 1].isupper():
            parts.append(s[start:i + 1])
            start = i + 1
    parts.append(s[start:])
    return [p.lower() for p in parts]


def strip_code_stopwords(words: list[str], table: StopwordTable | None = None) -> list[str]:
    """Drop stopword-table matches (case-insensitive) and length-1 words."""
    entries = (table or StopwordTable.default()).entries
    return [w for w in words if len(w) > 1 and w.lower() not in entries]


def extract_method_identifier(line: str) -> str | None:
    """The token immediately before '(' on a ``.method`` line, if any."""
    if not _METHOD_LINE_RE.search(line):
        return None
    head, sep, _ = line.partition("(")
    if not sep:
        return None
    tokens = head.split()
    if not tokens:
        return None
    return tokens[-1]


def scan_smali_methods(app: AppDirRef) -> list[str]:
    """Every method identifier in every ``*.smali`` file under the app root.

    Files are visited in lexicographic relative-path order; a file that
    cannot be read or decoded is skipped with a warning.
    """
    if not app.root_path.is_dir():
        raise FileNotFoundError(f"app directory missing: {app.root_path}")
    identifiers: list[str] = []
    for path in _walk_sorted(app.root_path):
        if path.suffix != ".smali":
            continue
        text = _read_text_lenient(path)
        if text is None:
            continue
        for line in text.splitlines():
            ident = extract_method_identifier(line)
            if ident is not None:
                identifiers.append(ident)
    return identifiers


def scan_xml_strings(app: AppDirRef) -> list[str]:
    """Words from every ``strings.xml`` under the app root.

    Extraction is regex-based (text between ``>`` and ``</``), tolerant of
    malformed XML; captures are whitespace-split and single-character
    tokens dropped.
    """
    if not app.root_path.is_dir():
        raise FileNotFoundError(f"app directory missing: {app.root_path}")
    words: list[str] = []
    for path in _walk_sorted(app.root_path):
        if path.name != "strings.xml":
            continue
        text = _read_text_lenient(path)
        if text is None:
            continue
        for captured in _XML_VALUE_RE.findall(text):
            words.extend(t for t in captured.split() if len(t) > 1)
    return words


def scan_gui_text(app: AppDirRef, ocr: OcrAdapter) -> list[str]:
    """Words OCR'd out of every image file under the app root."""
    if not app.root_path.is_dir():
        raise FileNotFoundError(f"app directory missing: {app.root_path}")
    words: list[str] = []
    for path in _walk_sorted(app.root_path):
        if not is_image_file(path):
            continue
        text = ocr.read_text(path)
        words.extend(t for t in text.split() if len(t) > 1)
    return words


def _count_files(root: Path) -> tuple[int, int, int]:
    smali = xml = image = 0
    for path in _walk_sorted(root):
        if path.suffix == ".smali":
            smali += 1
        elif path.name == "strings.xml":
            xml += 1
        elif is_image_file(path):
            image += 1
    return smali, xml, image


def assemble_record(
    app: AppDirRef,
    method_identifiers: list[str],
    xml_words: list[str],
    gui_words: list[str],
    *,
    smali_file_count: int = 0,
    xml_file_count: int = 0,
    image_file_count: int = 0,
    stopwords: StopwordTable | None = None,
) -> RawAppFeatures:
    """Build one raw record: split and stopword-filter the method names,
    lowercase the XML/GUI words."""
    split_words: list[str] = []
    for ident in method_identifiers:
        split_words.extend(split_identifier(ident))
    return RawAppFeatures(
        app=app,
        method_identifiers=list(method_identifiers),
        method_words=strip_code_stopwords(split_words, stopwords),
        xml_words=[w.lower() for w in xml_words],
        gui_words=[w.lower() for w in gui_words],
        smali_file_count=smali_file_count,
        xml_file_count=xml_file_count,
        image_file_count=image_file_count,
    )


def extract_app(app: AppDirRef, ocr: OcrAdapter,
                stopwords: StopwordTable | None = None) -> RawAppFeatures:
    """Scan all three sources of one app directory."""
    methods = scan_smali_methods(app)
    xml = scan_xml_strings(app)
    gui = scan_gui_text(app, ocr)
    smali_n, xml_n, image_n = _count_files(app.root_path)
    return assemble_record(
        app, methods, xml, gui,
        smali_file_count=smali_n, xml_file_count=xml_n,
        image_file_count=image_n, stopwords=stopwords,
    )


def discover_app_dirs(input_root: Path) -> list[AppDirRef]:
    """App directories named ``<sha256>__<package_id>`` under the input root,
    sorted by sha256."""
    if not input_root.is_dir():
        raise FileNotFoundError(f"input root missing: {input_root}")
    refs = []
    for entry in sorted(input_root.iterdir()):
        if not entry.is_dir() or "__" not in entry.name:
            continue
        digest, _, package = entry.name.partition("__")
        try:
            refs.append(AppDirRef(root_path=entry, sha256=digest, package_id=package))
        except ValueError as exc:
            log.warning("skipping %s: %s", entry.name, exc)
    return sorted(refs, key=lambda r: r.sha256)
