"""N-gram document statistics, N-gram IDF weights and candidate selection."""

from __future__ import annotations

import csv
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from algoname.tagging import KEYWORD, TaggedComment

Gram = tuple[str, ...]


def ngram_idf(n_docs: int, df: int, sdf: int) -> float:
    """``ln(N * df / sdf**2)``: positive when the words co-occur as a phrase
    more often than their joint document frequency alone predicts."""
    return math.log(n_docs * df / (sdf * sdf))


@dataclass(frozen=True)
class NgramTerm:
    tokens: Gram
    df: int
    sdf: int
    weight: float


class NgramStats:
    """Document frequencies of contiguous n-grams plus per-token posting sets.

    ``only_last`` restricts counted n-grams to those ending in one of the
    given tokens; postings are always kept for every token so ``sdf`` stays
    exact.
    """

    def __init__(self, max_n: int = 6, min_n: int = 1, only_last: Iterable[str] | None = None) -> None:
        if max_n < 1 or min_n < 1 or min_n > max_n:
            raise ValueError(f"bad n-gram range [{min_n}, {max_n}]")
        self.max_n = max_n
        self.min_n = min_n
        self.only_last = frozenset(only_last) if only_last is not None else None
        self.doc_ids: set[int] = set()
        self.df: Counter[Gram] = Counter()
        self.postings: defaultdict[str, set[int]] = defaultdict(set)
        self._sdf_cache: dict[frozenset[str], int] = {}

    @property
    def n_docs(self) -> int:
        return len(self.doc_ids)

    def add(self, doc_id: int, norms: Sequence[str]) -> None:
        if doc_id in self.doc_ids:
            raise ValueError(f"document {doc_id} counted twice")
        self.doc_ids.add(doc_id)
        self._sdf_cache.clear()
        for tok in norms:
            self.postings[tok].add(doc_id)
        seen: set[Gram] = set()
        for end in range(len(norms)):
            if self.only_last is not None and norms[end] not in self.only_last:
                continue
            for n in range(self.min_n, min(self.max_n, end + 1) + 1):
                seen.add(tuple(norms[end - n + 1 : end + 1]))
        self.df.update(seen)

    def sdf(self, gram: Gram) -> int:
        key = frozenset(gram)
        hit = self._sdf_cache.get(key)
        if hit is None:
            sets = sorted((self.postings.get(t, set()) for t in key), key=len)
            hit = len(set.intersection(*sets)) if sets else 0
            self._sdf_cache[key] = hit
        return hit

    def weight(self, gram: Gram) -> float:
        return ngram_idf(self.n_docs, self.df[gram], self.sdf(gram))

    def term(self, gram: Gram) -> NgramTerm:
        gram = tuple(gram)
        df = self.df[gram]
        if df == 0:
            raise KeyError(gram)
        return NgramTerm(gram, df, self.sdf(gram), self.weight(gram))

    def terms(self) -> list[NgramTerm]:
        return [self.term(g) for g in sorted(self.df)]

    def merge(self, other: "NgramStats") -> "NgramStats":
        """Combine statistics of two disjoint shards."""
        if (self.max_n, self.min_n, self.only_last) != (other.max_n, other.min_n, other.only_last):
            raise ValueError("cannot merge statistics built with different settings")
        if self.doc_ids & other.doc_ids:
            raise ValueError("shards share documents")
        out = NgramStats(self.max_n, self.min_n, self.only_last)
        out.doc_ids = self.doc_ids | other.doc_ids
        out.df = self.df + other.df
        for src in (self.postings, other.postings):
            for tok, ids in src.items():
                out.postings[tok] |= ids
        return out

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["ngram", "df", "sdf", "weight"])
            for t in self.terms():
                w.writerow([" ".join(t.tokens), t.df, t.sdf, repr(t.weight)])


def count_ngrams(corpus: Iterable[TaggedComment], max_n: int = 6, *, min_n: int = 1,
                 only_last: Iterable[str] | None = None) -> NgramStats:
    stats = NgramStats(max_n, min_n, only_last)
    for c in corpus:
        stats.add(c.comment_id, c.norms)
    return stats


@dataclass(frozen=True)
class CandidateOccurrence:
    comment_id: int
    start: int
    end: int  # exclusive token index
    tokens: Gram
    pos_seq: tuple[str, ...]
    source_path: str = ""
    language: str = ""
    text: str = ""  # the comment's cleaned token stream, for excerpts

    @property
    def span(self) -> tuple[int, int]:
        return self.start, self.end

    def to_json(self) -> dict:
        return {
            "comment_id": self.comment_id,
            "span": [self.start, self.end],
            "tokens": list(self.tokens),
            "pos": list(self.pos_seq),
            "source_path": self.source_path,
            "language": self.language,
            "text": self.text,
        }

    @classmethod
    def from_json(cls, d: Mapping) -> "CandidateOccurrence":
        start, end = d["span"]
        return cls(d["comment_id"], start, end, tuple(d["tokens"]), tuple(d["pos"]),
                   d.get("source_path", ""), d.get("language", ""), d.get("text", ""))


def select_candidates(corpus: Iterable[TaggedComment], stats: NgramStats, *, min_df: int = 2,
                      keywords: Iterable[str] = (KEYWORD,)) -> Iterator[CandidateOccurrence]:
    """Every occurrence of a 2..max_n-gram ending in a keyword with
    ``df >= min_df`` and positive weight."""
    kw = frozenset(keywords)
    for c in corpus:
        norms = c.norms
        labels = c.labels
        text = " ".join(t.surface for t in c.tokens)
        for end in range(len(norms)):
            if norms[end] not in kw:
                continue
            for n in range(2, min(stats.max_n, end + 1) + 1):
                start = end - n + 1
                gram = tuple(norms[start : end + 1])
                if stats.df[gram] < max(min_df, 1) or stats.weight(gram) <= 0:
                    continue
                yield CandidateOccurrence(c.comment_id, start, end + 1, gram, tuple(labels[start : end + 1]),
                                          c.source_path, c.language, text)
