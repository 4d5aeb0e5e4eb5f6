"""Comment text cleaning, tokenisation and coarse part-of-speech tagging."""

from __future__ import annotations

import enum
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Protocol, Sequence

from algoname import lexicon as lx

log = logging.getLogger(__name__)

KEYWORD = "algorithm"


class Pos(str, enum.Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    ADV = "ADV"
    ADP = "ADP"
    DET = "DET"
    NUM = "NUM"
    PART = "PART"
    CONJ = "CONJ"
    PRON = "PRON"
    OTHER = "OTHER"


VERB_ING = "VERB-ing"  # label used in POS sequences for an -ing verb

COARSEN: dict[str, Pos] = {p.value: p for p in Pos}
COARSEN.update({
    "PROPN": Pos.NOUN,
    "AUX": Pos.VERB,
    "CCONJ": Pos.CONJ,
    "SCONJ": Pos.ADP,
    "PUNCT": Pos.OTHER,
    "SYM": Pos.OTHER,
    "X": Pos.OTHER,
    "INTJ": Pos.OTHER,
})


def coarsen(tag: str) -> Pos:
    """Map a (possibly fine-grained) tag to the coarse set; unknown -> OTHER."""
    pos = COARSEN.get(tag.strip().upper())
    if pos is None:
        log.warning("unknown POS tag %r mapped to OTHER", tag)
        return Pos.OTHER
    return pos


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    pos: Pos

    @property
    def norm(self) -> str:
        return self.surface.lower()

    @property
    def ing(self) -> bool:
        return self.pos is Pos.VERB and self.norm.endswith("ing")

    @property
    def label(self) -> str:
        """Tag as used in POS sequences: ``VERB-ing`` for -ing verbs."""
        return VERB_ING if self.ing else self.pos.value


@dataclass(frozen=True)
class TaggedComment:
    comment_id: int
    tokens: tuple[TaggedToken, ...]
    source_path: str = ""
    language: str = ""

    @property
    def norms(self) -> list[str]:
        return [t.norm for t in self.tokens]

    @property
    def labels(self) -> list[str]:
        return [t.label for t in self.tokens]

    def to_json(self) -> dict:
        return {
            "comment_id": self.comment_id,
            "source_path": self.source_path,
            "language": self.language,
            "tokens": [t.surface for t in self.tokens],
            "tags": [t.pos.value for t in self.tokens],
        }

    @classmethod
    def from_json(cls, d: Mapping) -> "TaggedComment":
        toks = tuple(TaggedToken(s, Pos(p)) for s, p in zip(d["tokens"], d["tags"], strict=True))
        return cls(d["comment_id"], toks, d.get("source_path", ""), d.get("language", ""))


_NOT_KEPT = re.compile(r"[^\w\s\-'()]|_")
_SPACES = re.compile(r"\s+")


def clean_text(raw: str) -> str:
    """Replace everything but letters, digits, whitespace, ``-``, ``'`` and parens by spaces."""
    return _SPACES.sub(" ", _NOT_KEPT.sub(" ", raw)).strip()


def _detach_parens(tok: str) -> str:
    if len(tok) > 2 and tok[0] == "(" and tok[-1] == ")" and tok.count("(") == tok.count(")"):
        tok = tok[1:-1]
    while tok.startswith("(") and tok.count("(") > tok.count(")"):
        tok = tok[1:]
    while tok.endswith(")") and tok.count(")") > tok.count("("):
        tok = tok[:-1]
    return tok


def tokenize(cleaned: str) -> list[str]:
    """Whitespace split; unbalanced edge parentheses are detached ("(based" ->
    "based", "O(nd)" stays) and tokens without a letter or digit are dropped."""
    out = []
    for raw in cleaned.split():
        tok = _detach_parens(raw)
        if any(ch.isalnum() for ch in tok):
            out.append(tok)
    return out


class Tagger(Protocol):
    def tag(self, tokens: Sequence[str]) -> list[str]: ...


_NUMBER = re.compile(r"^[-+]?(\d+([.,]\d+)*|0x[0-9a-f]+|\d+(st|nd|rd|th))$", re.I)
_AMBIG = "AMBIG"


def _inflection_bases(w: str) -> list[str]:
    bases = [w]
    if w.endswith("ies") and len(w) > 4:
        bases.append(w[:-3] + "y")
    if w.endswith("es") and len(w) > 3:
        bases.append(w[:-2])
    if w.endswith("s") and len(w) > 2:
        bases.append(w[:-1])
    return bases


class BaselineTagger:
    """Dependency-free tagger: closed-class lexicon, open-class word lists and suffix rules.

    A single left-to-right pass then resolves noun/verb homographs ("sort"
    is a verb at the start of a comment, a noun inside "insertion sort" or
    right before the keyword),
    ``to`` (particle before a verb), and gerund compounds: an -ing word
    between a noun/adjective and a noun is a noun ("ray casting algorithm").
    """

    def __init__(self, keywords: Iterable[str] = (KEYWORD,)) -> None:
        self.keywords = frozenset(k.lower() for k in keywords)

    def lexical(self, word: str) -> str:
        w = word.lower()
        if w in self.keywords:
            return "NOUN"
        if w in lx.DETERMINERS:
            return "DET"
        if w in lx.PRONOUNS:
            return "PRON"
        if w in lx.CONJUNCTIONS:
            return "CONJ"
        if w in lx.PARTICLES:
            return "PART"
        if w in lx.ADPOSITIONS:
            return "ADP"
        if w in lx.NUMBER_WORDS or _NUMBER.match(w):
            return "NUM"
        if w in lx.MODALS:
            return "AUX"
        bases = _inflection_bases(w)
        if any(b in lx.NOUN_VERB for b in bases):
            return _AMBIG
        if any(b in lx.PURE_VERBS for b in bases):
            return "VERB"
        if w in lx.ADJECTIVES:
            return "ADJ"
        if w in lx.ADVERBS:
            return "ADV"
        if w in lx.ING_NOUNS:
            return "NOUN"
        if w.endswith("ing") and len(w) > 4:
            return "VERB"
        if w.endswith("ed") and len(w) > 3:
            return "VERB"
        if w.endswith("ly") and len(w) > 3 and w not in lx.LY_NON_ADVERBS:
            return "ADV"
        if len(w) >= 5 and w.endswith(lx.ADJ_SUFFIXES) and w not in lx.SUFFIX_NOUNS:
            return "ADJ"
        return "NOUN"

    def tag(self, tokens: Sequence[str]) -> list[str]:
        tags = [self.lexical(t) for t in tokens]
        n = len(tags)
        for k in range(n):
            if tags[k] != _AMBIG:
                continue
            prev = tags[k - 1] if k else None
            nxt = tags[k + 1] if k + 1 < n else None
            before_kw = k + 1 < n and tokens[k + 1].lower() in self.keywords
            verbal = (
                (k == 0 and not before_kw)
                or prev in ("PRON", "AUX")
                or (prev == "PART" and tokens[k - 1].lower() == "to")
                or nxt in ("DET", "PRON")
            )
            tags[k] = "VERB" if verbal else "NOUN"
        for k in range(n):
            if tokens[k].lower() == "to":
                nxt = tags[k + 1] if k + 1 < n else None
                tags[k] = "PART" if nxt in ("VERB", "AUX") else "ADP"
        for k in range(1, n - 1):
            w = tokens[k].lower()
            if (tags[k] == "VERB" and w.endswith("ing") and not _pure_verb_gerund(w)
                    and tags[k - 1] in ("NOUN", "ADJ") and tags[k + 1] == "NOUN"):
                tags[k] = "NOUN"
        return tags


def _pure_verb_gerund(w: str) -> bool:
    stem = w[:-3]
    candidates = {stem, stem + "e"}
    if len(stem) > 2 and stem[-1] == stem[-2]:
        candidates.add(stem[:-1])
    return bool(candidates & lx.PURE_VERBS)


def tag_tokens(tokens: Sequence[str], tagger: Tagger, keywords: Iterable[str] = (KEYWORD,)) -> list[TaggedToken]:
    """Tag ``tokens``, coarsen the tagger's output and force keywords to NOUN."""
    raw = tagger.tag(tokens)
    if len(raw) != len(tokens):
        raise ValueError(f"tagger returned {len(raw)} tags for {len(tokens)} tokens")
    return _apply(tokens, raw, frozenset(k.lower() for k in keywords))


def _apply(tokens: Sequence[str], raw_tags: Sequence[str], keywords: frozenset[str]) -> list[TaggedToken]:
    out = []
    for tok, tag in zip(tokens, raw_tags):
        pos = Pos.NOUN if tok.lower() in keywords else coarsen(tag)
        out.append(TaggedToken(tok, pos))
    return out


def tag_comment(comment_id: int, raw_text: str, tagger: Tagger, *, source_path: str = "",
                language: str = "", keywords: Iterable[str] = (KEYWORD,)) -> TaggedComment:
    tokens = tokenize(clean_text(raw_text))
    return TaggedComment(comment_id, tuple(tag_tokens(tokens, tagger, keywords)), source_path, language)


# ---------------------------------------------------------------- sidecar tags

class SidecarError(ValueError):
    pass


def read_sidecar(path: str | Path) -> dict[int, list[tuple[str, str]]]:
    """Parse ``#id <n>`` blocks of ``token<TAB>TAG`` lines."""
    blocks: dict[int, list[tuple[str, str]]] = {}
    current: list[tuple[str, str]] | None = None
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            current = None
            continue
        if line.startswith("#id"):
            try:
                cid = int(line.split()[1])
            except (IndexError, ValueError):
                raise SidecarError(f"{path}:{lineno}: malformed header {line!r}") from None
            current = blocks.setdefault(cid, [])
            continue
        if current is None:
            raise SidecarError(f"{path}:{lineno}: token line outside an #id block")
        tok, sep, tag = line.partition("\t")
        if not sep:
            raise SidecarError(f"{path}:{lineno}: expected token<TAB>TAG")
        current.append((tok, tag))
    return blocks


def write_sidecar(comments: Iterable[TaggedComment], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for c in comments:
            fh.write(f"#id {c.comment_id}\n")
            for t in c.tokens:
                fh.write(f"{t.surface}\t{t.pos.value}\n")
            fh.write("\n")


def import_sidecar_tags(corpus: dict[int, TaggedComment], sidecar: str | Path,
                        keywords: Iterable[str] = (KEYWORD,)) -> int:
    """Replace tags in ``corpus`` (keyed by comment id) with externally produced ones.

    Returns the number of comments re-tagged.
    """
    kw = frozenset(k.lower() for k in keywords)
    blocks = read_sidecar(sidecar)
    unknown = sorted(set(blocks) - set(corpus))
    if unknown:
        raise SidecarError(f"sidecar refers to unknown comment ids: {unknown[:10]}")
    for cid, rows in blocks.items():
        old = corpus[cid]
        if len(rows) != len(old.tokens):
            raise SidecarError(
                f"comment {cid}: sidecar has {len(rows)} tokens, corpus has {len(old.tokens)}"
            )
        tokens = [t.surface for t in old.tokens]
        corpus[cid] = TaggedComment(cid, tuple(_apply(tokens, [tag for _, tag in rows], kw)),
                                    old.source_path, old.language)
    return len(blocks)
