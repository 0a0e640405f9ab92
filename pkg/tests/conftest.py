"""Shared fixtures: the bundled dictionary and a builder that reconstructs
the sample app's decompiled directory from the raw data files in
tests/data/london_app/."""

from __future__ import annotations

import hashlib
from pathlib import Path

import pytest
from hypothesis import settings

from apptopics.extract import AppDirRef
from apptopics.textstats import EnglishDictionary

settings.register_profile("suite", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("suite")

DATA_DIR = Path(__file__).parent / "data"
LONDON_DIR = DATA_DIR / "london_app"
LONDON_PACKAGE = "com.londonapp.guide"
LONDON_SHA = hashlib.sha256(LONDON_PACKAGE.encode()).hexdigest()

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def london_method_stream() -> list[str]:
    return (LONDON_DIR / "method_stream.txt").read_text().split()


def london_identifiers() -> list[str]:
    """Rebuild method identifiers from the printed split-word stream.

    Within an identifier every word after the first is capitalized
    (camelCase), so a lowercase-initial word starts a new identifier.
    """
    tokens = london_method_stream()
    identifiers: list[str] = []
    current = [tokens[0]]
    for token in tokens[1:]:
        if token[0].islower():
            identifiers.append("".join(current))
            current = [token]
        else:
            current.append(token)
    identifiers.append("".join(current))
    return identifiers


def build_london_app(root: Path) -> AppDirRef:
    """Materialize the sample app as a decompiled directory with sidecar
    OCR text, returning its reference."""
    app_dir = root / f"{LONDON_SHA}__{LONDON_PACKAGE}"
    smali_dir = app_dir / "smali" / "com" / "londonapp"
    smali_dir.mkdir(parents=True)
    lines = []
    for ident in london_identifiers():
        lines.append(f".method public {ident}(Ljava/lang/String;)V")
        lines.append("    .locals 0")
        lines.append("    return-void")
        lines.append(".end method")
        lines.append("")
    (smali_dir / "MainActivity.smali").write_text("\n".join(lines))

    values_dir = app_dir / "res" / "values"
    values_dir.mkdir(parents=True)
    xml_lines = ["<resources>"]
    for i, value in enumerate((LONDON_DIR / "xml_values.txt").read_text().splitlines()):
        xml_lines.append(f'    <string name="s{i}">{value}</string>')
    xml_lines.append("</resources>")
    (values_dir / "strings.xml").write_text("\n".join(xml_lines))

    drawable_dir = app_dir / "res" / "drawable"
    drawable_dir.mkdir(parents=True)
    image = drawable_dir / "splash.png"
    image.write_bytes(PNG_MAGIC + b"not-a-real-png")
    Path(str(image) + ".txt").write_text((LONDON_DIR / "gui_text.txt").read_text())
    return AppDirRef(root_path=app_dir, sha256=LONDON_SHA, package_id=LONDON_PACKAGE)


@pytest.fixture(scope="session")
def dictionary() -> EnglishDictionary:
    return EnglishDictionary.load_default()


@pytest.fixture()
def london_app(tmp_path) -> AppDirRef:
    return build_london_app(tmp_path)
