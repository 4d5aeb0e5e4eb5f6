import json
import logging

import pytest
from hypothesis import given, settings, strategies as st

from algoname.comments import CommentKind, LITERAL_REGION_KINDS, extract_comments, number_comments, scan_regions
from algoname.corpus import Language, SourceFile, detect_language, scan_tree
from algoname.tagging import clean_text

from conftest import LEXER_DATA, MINI_CORPUS


def _docs(text, lang, **kw):
    return extract_comments(SourceFile.from_text("f", text, lang), **kw)


def _fixture_files():
    files = list(scan_tree(MINI_CORPUS)) + list(scan_tree(LEXER_DATA))
    assert len(files) == 24
    return files


def test_md5_block():
    (d,) = _docs("/* This is the central step in the MD5 algorithm */", Language.CPP)
    assert d.kind is CommentKind.BLOCK
    assert d.raw_text == "This is the central step in the MD5 algorithm"


def test_hash_inside_python_string():
    assert _docs('s = "# not a comment"', Language.PYTHON) == []


def test_ruby_begin_end():
    (d,) = _docs("=begin\nkex algorithm negotiation\n=end\nx = 1\n", Language.RUBY)
    assert d.kind is CommentKind.BLOCK and "kex algorithm" in d.raw_text
    assert (d.start_line, d.end_line) == (1, 3)


def test_js_consecutive_lines_merge():
    (d,) = _docs("// ray casting algorithm\n// next line\nf();\n", Language.JAVASCRIPT)
    assert d.kind is CommentKind.LINE_RUN
    assert d.raw_text == "ray casting algorithm\nnext line"
    assert (d.start_line, d.end_line) == (1, 2)


def test_code_line_breaks_a_run():
    docs = _docs("# one\nx = 1\n# two\n", Language.PYTHON)
    assert [d.raw_text for d in docs] == ["one", "two"]


def test_javadoc_gutter_removed():
    (d,) = _docs("/**\n * Sorts using an insertion sort algorithm.\n * @param a array\n */", Language.JAVA)
    assert d.raw_text == "Sorts using an insertion sort algorithm.\n@param a array"


def test_unterminated_block_warns(caplog):
    with caplog.at_level(logging.WARNING):
        (d,) = _docs("int x;\n/* dangling quick sort algorithm\n", Language.C)
    assert d.kind is CommentKind.BLOCK and d.raw_text == "dangling quick sort algorithm"
    assert "unterminated block comment" in caplog.text


def test_docstring_flag():
    src = 'def f():\n    """Uses the rc4 algorithm."""\n    return 1\n'
    assert [d.raw_text for d in _docs(src, Language.PYTHON)] == ["Uses the rc4 algorithm."]
    assert _docs(src, Language.PYTHON, docstrings=False) == []


def test_php_outside_tags_is_html():
    assert _docs("<p>// not code</p>\n# nor this\n", Language.PHP) == []


def test_number_comments():
    docs = number_comments(_docs("// a\nx;\n// b\n", Language.C), start=5)
    assert [d.comment_id for d in docs] == [5, 6]


@pytest.mark.parametrize("name", sorted(json.loads((LEXER_DATA / "expected.json").read_text())))
def test_annotated_spans(name):
    spans = json.loads((LEXER_DATA / "expected.json").read_text())[name]
    sf = SourceFile.from_bytes(name, detect_language(name), (LEXER_DATA / name).read_bytes())
    got = [(d.start_line, d.end_line, d.kind.value, clean_text(d.raw_text)) for d in extract_comments(sf)]
    assert got == [(a, b, k, clean_text(t)) for a, b, k, t in spans]


def _residue(text, lang):
    """Text with comments removed and string contents emptied.

    Regex literals stay whole: an emptied ``/x/`` would read as ``//``.
    """
    res = scan_regions(text, lang)
    out, pos = [], 0
    for r in res.regions:
        if r.start < pos:
            continue  # nested (JS template interpolation): handled by its parent
        out.append(text[pos:r.start])
        if r.kind == "regex":
            out.append(text[r.start:r.end])
        elif r.kind in LITERAL_REGION_KINDS:
            out.append(text[r.start:r.body_start] + text[r.body_end:r.end])
        pos = r.end
    out.append(text[pos:])
    return "".join(out)


@pytest.mark.parametrize("sf", _fixture_files(), ids=lambda f: f.path)
def test_residue_has_no_comments(sf):
    assert scan_regions(_residue(sf.content, sf.language), sf.language).comments == []


_C_DELIMS = ("//", "/*", "*/")
_DELIMS = {
    Language.C: _C_DELIMS, Language.CPP: _C_DELIMS, Language.JAVA: _C_DELIMS, Language.JAVASCRIPT: _C_DELIMS,
    Language.PHP: _C_DELIMS + ("#",),
    Language.PYTHON: ("#", '"""', "'''"),
    Language.RUBY: ("#", "=begin", "=end"),
}


@pytest.mark.parametrize("sf", _fixture_files(), ids=lambda f: f.path)
def test_doc_invariants(sf):
    docs = extract_comments(sf)
    assert docs == extract_comments(sf)  # deterministic
    n_lines = sf.content.count("\n") + 1
    for d in docs:
        assert 1 <= d.start_line <= d.end_line <= n_lines
        for delim in _DELIMS[sf.language]:
            assert not d.raw_text.startswith(delim) and not d.raw_text.endswith(delim)
    regions = scan_regions(sf.content, sf.language).comments
    for a, b in zip(regions, regions[1:]):
        assert a.end <= b.start


# -------------------------------------------------------------- generated sources

_BODY = st.text("abc /*#-", min_size=1, max_size=12).filter(lambda s: s.strip() and "*/" not in s)
_STR = st.text("abc /*#-", max_size=12)
_IDENT = st.sampled_from(["x", "foo", "bar_2", "k"])

_SYNTAX = {
    Language.C: ("// {}\n", "/* {} */", '"{}"'),
    Language.CPP: ("// {}\n", "/* {} */", '"{}"'),
    Language.JAVA: ("// {}\n", "/* {} */", '"{}"'),
    Language.JAVASCRIPT: ("// {}\n", "/* {} */", "'{}'"),
    Language.PHP: ("# {}\n", "/* {} */", "'{}'"),
    Language.PYTHON: ("# {}\n", None, "v = '{}'\n"),
    Language.RUBY: ("# {}\n", "\n=begin\n{}\n=end\n", "'{}'"),
}

_segment = st.one_of(
    st.tuples(st.just("code"), _IDENT),
    st.tuples(st.just("line"), _BODY),
    st.tuples(st.just("block"), _BODY),
    st.tuples(st.just("string"), _STR),
)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(sorted(_SYNTAX, key=lambda l: l.value)), st.lists(_segment, max_size=12))
def test_generated_sources_round_trip(lang, segments):
    line_fmt, block_fmt, str_fmt = _SYNTAX[lang]
    parts = ["<?php\n"] if lang is Language.PHP else []
    comments, strings = [], []
    for kind, value in segments:
        if kind == "code":
            parts.append(f" {value} ")
        elif kind == "line":
            parts.append(line_fmt.format(value))
            comments.append(value.strip())
        elif kind == "block" and block_fmt:
            parts.append(block_fmt.format(value))
            comments.append(value.strip())
        elif kind == "string":
            parts.append(str_fmt.format(value))
            strings.append(value)
    text = " ".join(parts)  # adjacent "" "" would read as a triple quote
    res = scan_regions(text, lang)
    got_comments = [text[r.body_start:r.body_end].strip() for r in res.comments]
    got_strings = [text[r.body_start:r.body_end] for r in res.regions if r.kind == "string"]
    assert got_comments == comments
    assert got_strings == strings
    assert res.warnings == []
