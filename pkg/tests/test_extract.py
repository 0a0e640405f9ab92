"""Scanner and splitter behaviour, including the reconstructed sample app."""

from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apptopics.extract import (
    CODE_STOPWORDS,
    AppDirRef,
    SidecarOcr,
    StopwordTable,
    assemble_record,
    discover_app_dirs,
    extract_app,
    extract_method_identifier,
    is_image_file,
    scan_gui_text,
    scan_smali_methods,
    scan_xml_strings,
    split_identifier,
    strip_code_stopwords,
)

from conftest import PNG_MAGIC, london_method_stream

SHA_A = "a" * 64
SHA_B = "b" * 64


def make_app(tmp_path, sha=SHA_A, package="com.example.app") -> AppDirRef:
    root = tmp_path / f"{sha}__{package}"
    root.mkdir(parents=True, exist_ok=True)
    return AppDirRef(root_path=root, sha256=sha, package_id=package)


class TestSplitIdentifier:
    @pytest.mark.parametrize("identifier,expected", [
        ("getBirthData", ["get", "birth", "data"]),
        ("createParcelArray", ["create", "parcel", "array"]),
        ("snake_case", ["snakecase"]),
        ("bulkInsert", ["bulk", "insert"]),
        ("drawCompass", ["draw", "compass"]),
        ("<clinit>", ["<clinit>"]),
        ("page2Limit", ["page2limit"]),
        ("", []),
        ("_", []),
    ])
    def test_examples(self, identifier, expected):
        assert split_identifier(identifier) == expected

    @given(st.text(alphabet=st.characters(min_codepoint=33, max_codepoint=126),
                   max_size=30))
    def test_rejoin_property(self, identifier):
        parts = split_identifier(identifier)
        assert "".join(parts) == identifier.replace("_", "").lower()


class TestStopwords:
    def test_default_table_is_the_fixed_list(self):
        table = StopwordTable.default()
        assert table.entries == CODE_STOPWORDS
        assert len(CODE_STOPWORDS) == 86
        for word in ("create", "on", "get", "<clinit>", "<init>", "button", "view"):
            assert word in CODE_STOPWORDS
        for word in ("draw", "insert", "compass", "is"):
            assert word not in CODE_STOPWORDS

    @pytest.mark.parametrize("words,expected", [
        (["get", "birth", "data"], ["birth", "data"]),
        (["create", "parcel", "array"], ["parcel", "array"]),
        (["a", "b"], []),
        (["on", "create"], []),
    ])
    def test_examples(self, words, expected):
        assert strip_code_stopwords(words) == expected

    def test_extension(self):
        table = StopwordTable.extended(["Compass"])
        assert strip_code_stopwords(["draw", "compass"], table) == ["draw"]

    @given(st.lists(st.text(alphabet="abcdefgh<>", min_size=1, max_size=8), max_size=20))
    def test_idempotent_and_no_new_words(self, words):
        once = strip_code_stopwords(words)
        assert strip_code_stopwords(once) == once
        remaining = list(words)
        for w in once:
            remaining.remove(w)  # raises if a word appeared from nowhere


class TestSmaliScan:
    def test_method_line_extraction(self, tmp_path):
        app = make_app(tmp_path)
        (app.root_path / "a.smali").write_text(
            ".class public Lcom/x/P;\n"
            ".method public bulkInsert(Landroid/net/Uri;[Landroid/content/ContentValues;)I\n"
            "    return v0\n"
            ".end method\n"
            ".method static constructor <clinit>()V\n"
            ".end method\n"
        )
        assert scan_smali_methods(app) == ["bulkInsert", "<clinit>"]

    def test_no_method_lines(self, tmp_path):
        app = make_app(tmp_path)
        (app.root_path / "a.smali").write_text(".class public Lcom/x/P;\n")
        assert scan_smali_methods(app) == []

    def test_missing_root_is_fatal(self, tmp_path):
        app = AppDirRef(tmp_path / f"{SHA_B}__gone", SHA_B, "gone")
        with pytest.raises(FileNotFoundError):
            scan_smali_methods(app)

    def test_undecodable_file_skipped(self, tmp_path, caplog):
        app = make_app(tmp_path)
        (app.root_path / "a.smali").write_text(".method public fooBar()V\n")
        # latin-1 decodes any byte string, so break it at the IO level instead
        bad = app.root_path / "b.smali"
        bad.mkdir()
        (bad / "keep").write_text("")
        assert scan_smali_methods(app) == ["fooBar"]

    def test_deterministic_file_order(self, tmp_path):
        app = make_app(tmp_path)
        (app.root_path / "z").mkdir()
        (app.root_path / "a").mkdir()
        (app.root_path / "z" / "one.smali").write_text(".method public zee()V\n")
        (app.root_path / "a" / "two.smali").write_text(".method public eh()V\n")
        assert scan_smali_methods(app) == ["eh", "zee"]

    def test_extract_identifier_edge_cases(self):
        assert extract_method_identifier(".method public foo(I)V") == "foo"
        assert extract_method_identifier(".method abstract bar ()V") == "bar"
        assert extract_method_identifier(".method public broken") is None
        assert extract_method_identifier(".end method") is None
        assert extract_method_identifier("const/4 v0, 0x1") is None


class TestXmlScan:
    def test_values_extracted(self, tmp_path):
        app = make_app(tmp_path)
        res = app.root_path / "res" / "values"
        res.mkdir(parents=True)
        (res / "strings.xml").write_text(
            '<resources><string name="x">Find your location</string></resources>'
        )
        assert scan_xml_strings(app) == ["Find", "your", "location"]

    def test_single_characters_dropped(self, tmp_path):
        app = make_app(tmp_path)
        (app.root_path / "strings.xml").write_text('<string name="y">I m</string>')
        assert scan_xml_strings(app) == []

    def test_malformed_xml_tolerated(self, tmp_path):
        app = make_app(tmp_path)
        (app.root_path / "strings.xml").write_text(
            "<string>broken value</string><unclosed><string>second one</")
        assert "broken" in scan_xml_strings(app)
        assert "second" in scan_xml_strings(app)

    def test_other_xml_files_ignored(self, tmp_path):
        app = make_app(tmp_path)
        (app.root_path / "colors.xml").write_text("<color>deep red</color>")
        assert scan_xml_strings(app) == []


class TestGuiScan:
    def test_sidecar_text(self, tmp_path):
        app = make_app(tmp_path)
        image = app.root_path / "logo.png"
        image.write_bytes(PNG_MAGIC + b"x")
        Path(str(image) + ".txt").write_text("Mi Fabs fil")
        assert scan_gui_text(app, SidecarOcr()) == ["Mi", "Fabs", "fil"]

    def test_non_image_skipped(self, tmp_path):
        app = make_app(tmp_path)
        (app.root_path / "notes.txt").write_text("plain words here")
        assert scan_gui_text(app, SidecarOcr()) == []

    def test_no_images(self, tmp_path):
        app = make_app(tmp_path)
        assert scan_gui_text(app, SidecarOcr()) == []

    def test_image_probe(self, tmp_path):
        jpeg = tmp_path / "a.jpg"
        jpeg.write_bytes(b"\xff\xd8\xff\xe0junk")
        webp = tmp_path / "b.webp"
        webp.write_bytes(b"RIFF....WEBPjunk")
        text = tmp_path / "c.txt"
        text.write_text("RIFF is not enough")
        assert is_image_file(jpeg) and is_image_file(webp)
        assert not is_image_file(text)


class TestAssemble:
    def test_stopwords_applied_after_split(self, tmp_path):
        app = make_app(tmp_path)
        rec = assemble_record(app, ["onCreate"], [], [])
        assert rec.method_words == []

    def test_all_sources_empty(self, tmp_path):
        app = make_app(tmp_path)
        rec = assemble_record(app, [], [], [])
        assert rec.method_words == rec.xml_words == rec.gui_words == []

    def test_non_stopword_survives(self, tmp_path):
        app = make_app(tmp_path)
        rec = assemble_record(app, ["drawCompass"], ["Find"], ["OW"])
        assert rec.method_words == ["draw", "compass"]
        assert rec.xml_words == ["find"]
        assert rec.gui_words == ["ow"]


class TestLondonApp:
    def test_split_stream_matches_printed_listing(self, london_app):
        identifiers = scan_smali_methods(london_app)
        split = [w for ident in identifiers for w in split_identifier(ident)]
        assert split == [t.lower() for t in london_method_stream()]

    def test_determinism(self, london_app):
        first = extract_app(london_app, SidecarOcr())
        second = extract_app(london_app, SidecarOcr())
        assert first == second

    def test_counts(self, london_app):
        rec = extract_app(london_app, SidecarOcr())
        assert rec.smali_file_count == 1
        assert rec.xml_file_count == 1
        assert rec.image_file_count == 1
        assert rec.gui_words and rec.xml_words and rec.method_words


class TestDiscovery:
    def test_layout_parsing(self, tmp_path):
        (tmp_path / f"{SHA_B}__org.x.y").mkdir()
        (tmp_path / f"{SHA_A}__com.a.b").mkdir()
        (tmp_path / "README").write_text("")
        (tmp_path / "badname").mkdir()
        refs = discover_app_dirs(tmp_path)
        assert [r.sha256 for r in refs] == [SHA_A, SHA_B]
        assert refs[0].package_id == "com.a.b"

    def test_missing_root(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            discover_app_dirs(tmp_path / "nope")
