import logging

import pytest
from hypothesis import given, strategies as st

from algoname.tagging import (
    BaselineTagger, Pos, SidecarError, TaggedComment, TaggedToken, clean_text, coarsen, import_sidecar_tags,
    read_sidecar, tag_comment, tag_tokens, tokenize, write_sidecar,
)


@pytest.mark.parametrize("raw,cleaned", [
    ("*/ Sorts the array */", "Sorts the array"),
    ("", ""),
    ("O(nd) Difference", "O(nd) Difference"),
    ("# nagle's   algorithm\n\t(see RFC-896)", "nagle's algorithm (see RFC-896)"),
    ("snake_case_name", "snake case name"),
])
def test_clean_text(raw, cleaned):
    assert clean_text(raw) == cleaned


@given(st.text())
def test_clean_text_idempotent(s):
    assert clean_text(clean_text(s)) == clean_text(s)


@given(st.text())
def test_clean_text_alphabet(s):
    out = clean_text(s)
    assert out == out.strip() and "  " not in out
    assert all(c.isalnum() or c in " -'()" for c in out)


@pytest.mark.parametrize("cleaned,tokens", [
    ("Insertion Sort algorithm", ["Insertion", "Sort", "algorithm"]),
    ("Nagle's algorithm", ["Nagle's", "algorithm"]),
    ("   ", []),
    ("O(nd) Difference", ["O(nd)", "Difference"]),
    ("(rc4 algorithm)", ["rc4", "algorithm"]),
    ("see (RFC-896) - here", ["see", "RFC-896", "here"]),
])
def test_tokenize(cleaned, tokens):
    assert tokenize(cleaned) == tokens


def _tags(words):
    return [(t.surface, t.pos.value) for t in tag_tokens(words, BaselineTagger())]


def test_tag_examples():
    assert _tags(["sort", "algorithm"]) == [("sort", "NOUN"), ("algorithm", "NOUN")]
    assert _tags(["algorithm"]) == [("algorithm", "NOUN")]
    assert _tags(["the", "algorithm"]) == [("the", "DET"), ("algorithm", "NOUN")]
    assert _tags(["using", "an", "Insertion", "Sort", "algorithm"]) == [
        ("using", "VERB"), ("an", "DET"), ("Insertion", "NOUN"), ("Sort", "NOUN"), ("algorithm", "NOUN")]
    # "using" stays a verb between a modifier and a noun
    assert [t.label for t in tag_tokens(["encrypted", "using", "RC4"], BaselineTagger())][1:] == ["VERB-ing", "NOUN"]


class _AllVerbs:
    def tag(self, tokens):
        return ["VERB"] * len(tokens)


class _Short:
    def tag(self, tokens):
        return ["NOUN"] * (len(tokens) - 1)


_words = st.lists(st.sampled_from(["sort", "Algorithm", "ALGORITHM", "the", "quick", "using", "of", "3"]), max_size=10)


@given(_words)
def test_forced_noun_and_length(words):
    for tagger in (BaselineTagger(), _AllVerbs()):
        out = tag_tokens(words, tagger)
        assert len(out) == len(words)
        assert [t.surface for t in out] == words
        assert all(t.pos is Pos.NOUN for t in out if t.norm == "algorithm")
        assert all(t.pos is Pos.VERB for t in out if t.ing)


def test_tagger_length_mismatch():
    with pytest.raises(ValueError):
        tag_tokens(["a", "b"], _Short())


@pytest.mark.parametrize("tag,pos", [
    ("PROPN", Pos.NOUN), ("AUX", Pos.VERB), ("CCONJ", Pos.CONJ), ("SCONJ", Pos.ADP),
    ("PUNCT", Pos.OTHER), ("SYM", Pos.OTHER), ("X", Pos.OTHER), ("INTJ", Pos.OTHER),
    ("NOUN", Pos.NOUN), ("adj", Pos.ADJ),
])
def test_coarsen(tag, pos):
    assert coarsen(tag) is pos


def test_coarsen_unknown_warns(caplog):
    with caplog.at_level(logging.WARNING):
        assert coarsen("FOO") is Pos.OTHER
    assert "FOO" in caplog.text


def test_token_label():
    assert TaggedToken("Sorting", Pos.VERB).label == "VERB-ing"
    assert TaggedToken("thing", Pos.NOUN).label == "NOUN"
    assert TaggedToken("Sorting", Pos.VERB).norm == "sorting"


def test_tagged_comment_json_round_trip():
    c = tag_comment(3, "Uses the Nagle's algorithm", BaselineTagger(), source_path="a.py", language="Python")
    assert TaggedComment.from_json(c.to_json()) == c


# ---------------------------------------------------------------- sidecar

def _corpus():
    t = BaselineTagger()
    return {1: tag_comment(1, "Unicode Bidirectional algorithm", t), 2: tag_comment(2, "rc4 algorithm", t)}


def _write(tmp_path, text):
    p = tmp_path / "tags.txt"
    p.write_text(text)
    return p


def test_sidecar_import(tmp_path):
    corpus = _corpus()
    side = _write(tmp_path, "#id 1\nUnicode\tPROPN\nBidirectional\tADJ\nalgorithm\tVERB\n\n"
                            "#id 2\nrc4\tPROPN\nalgorithm\tNOUN\n")
    assert import_sidecar_tags(corpus, side) == 2
    assert corpus[1].labels == ["NOUN", "ADJ", "NOUN"]  # PROPN coarsened, keyword forced
    assert corpus[2].labels == ["NOUN", "NOUN"]


def test_sidecar_mismatch(tmp_path):
    side = _write(tmp_path, "#id 2\nrc4\tNOUN\nalgorithm\tNOUN\nextra\tNOUN\n")
    with pytest.raises(SidecarError, match="comment 2"):
        import_sidecar_tags(_corpus(), side)


def test_sidecar_unknown_id(tmp_path):
    with pytest.raises(SidecarError, match="unknown comment ids"):
        import_sidecar_tags(_corpus(), _write(tmp_path, "#id 9\nx\tNOUN\n"))


def test_sidecar_malformed(tmp_path):
    with pytest.raises(SidecarError):
        read_sidecar(_write(tmp_path, "rc4\tNOUN\n"))
    with pytest.raises(SidecarError):
        read_sidecar(_write(tmp_path, "#id 1\nrc4 NOUN\n"))


def test_sidecar_round_trip(tmp_path):
    corpus = _corpus()
    p = tmp_path / "out.txt"
    write_sidecar(corpus.values(), p)
    again = _corpus()
    assert import_sidecar_tags(again, p) == 2
    assert again == corpus
