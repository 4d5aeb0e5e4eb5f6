"""Frequency tables, provenance listings and evaluation against a labelled oracle."""

from __future__ import annotations

import csv
import io
import json
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from algoname.rules import INVALID, VALID, Verdict
from algoname.tagging import KEYWORD

EXCERPT_WIDTH = 80

# language column order of the report table
LANGUAGE_ORDER = ("Java", "Ruby", "Python", "PHP", "C", "Cpp", "JavaScript")


def make_excerpt(text: str, start: int, end: int, width: int = EXCERPT_WIDTH) -> str:
    """About ``width`` characters of ``text`` centred on tokens ``[start, end)``.

    The matched term is wrapped in ``**``; trimming happens at word boundaries.
    """
    toks = text.split()
    term = " ".join(toks[start:end])
    budget = max(0, width - len(term))
    left, right = toks[:start], toks[end:]
    lw, rw = budget // 2, budget - budget // 2
    # hand unused budget from a short side to the other
    left_len = len(" ".join(left)) + (1 if left else 0)
    right_len = len(" ".join(right)) + (1 if right else 0)
    if left_len < lw:
        rw += lw - left_len
    if right_len < rw:
        lw += rw - right_len

    kept_left: list[str] = []
    used = 0
    for w in reversed(left):
        if used + len(w) + 1 > lw:
            break
        kept_left.insert(0, w)
        used += len(w) + 1
    kept_right: list[str] = []
    used = 0
    for w in right:
        if used + len(w) + 1 > rw:
            break
        kept_right.append(w)
        used += len(w) + 1

    parts = []
    if len(kept_left) < len(left):
        parts.append("...")
    parts.extend(kept_left)
    parts.append(f"**{term}**")
    parts.extend(kept_right)
    if len(kept_right) < len(right):
        parts.append("...")
    return " ".join(parts)


@dataclass(frozen=True)
class Provenance:
    source_path: str
    comment_id: int
    excerpt: str

    @classmethod
    def from_occurrence(cls, occ) -> "Provenance":
        return cls(occ.source_path, occ.comment_id, make_excerpt(occ.text, occ.start, occ.end))


@dataclass(frozen=True)
class AlgorithmNameRecord:
    tokens: tuple[str, ...]
    majority_pos: tuple[str, ...]
    verdict: Verdict
    frequency: int
    language: str
    provenance: list[Provenance] = field(default_factory=list, hash=False, compare=False)

    @property
    def term(self) -> str:
        return " ".join(self.tokens)

    def to_json(self) -> dict:
        return {
            "language": self.language,
            "term": self.term,
            "tokens": list(self.tokens),
            "majority_pos": list(self.majority_pos),
            "verdict": self.verdict.value,
            "matched_branch": self.verdict.matched_branch,
            "frequency": self.frequency,
            "provenance": [
                {"source_path": p.source_path, "comment_id": p.comment_id, "excerpt": p.excerpt}
                for p in self.provenance
            ],
        }

    @classmethod
    def from_json(cls, d: Mapping) -> "AlgorithmNameRecord":
        prov = [Provenance(p["source_path"], p["comment_id"], p["excerpt"]) for p in d.get("provenance", [])]
        return cls(tuple(d["tokens"]), tuple(d["majority_pos"]), Verdict(d["verdict"], d["matched_branch"]),
                   d["frequency"], d["language"], prov)


# ---------------------------------------------------------------- frequency table

@dataclass(frozen=True)
class TableRow:
    rank: int
    language: str
    term: str
    frequency: int


def build_frequency_table(records: Iterable[AlgorithmNameRecord], top_k: int | None = 10, *,
                          by_language: bool = True, denylist: Iterable[str] = ()) -> list[TableRow]:
    """Valid names ranked by frequency (ties: term order), per language or pooled."""
    deny = {d.strip().lower() for d in denylist}
    totals: defaultdict[str, defaultdict[str, int]] = defaultdict(lambda: defaultdict(int))
    for r in records:
        if not r.verdict.valid or r.term in deny:
            continue
        lang = r.language if by_language else "ALL"
        totals[lang][r.term] += r.frequency

    def lang_key(lang: str):
        return (LANGUAGE_ORDER.index(lang) if lang in LANGUAGE_ORDER else len(LANGUAGE_ORDER), lang)

    rows = []
    for lang in sorted(totals, key=lang_key):
        ranked = sorted(totals[lang].items(), key=lambda kv: (-kv[1], kv[0].split()))
        if top_k is not None:
            ranked = ranked[:top_k]
        rows.extend(TableRow(i, lang, term, freq) for i, (term, freq) in enumerate(ranked, 1))
    return rows


def short_name(term: str, keyword: str = KEYWORD) -> str:
    """``"ray casting algorithm"`` -> ``"Ray casting"``."""
    words = term.split()
    if len(words) > 1 and words[-1] == keyword:
        words = words[:-1]
    s = " ".join(words)
    return s[:1].upper() + s[1:]


def table_to_csv(rows: Sequence[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["rank", "language", "term", "frequency"])
    for r in rows:
        w.writerow([r.rank, r.language, r.term, r.frequency])
    return buf.getvalue()


def table_to_json(rows: Sequence[TableRow]) -> str:
    data = [{"rank": r.rank, "language": r.language, "term": r.term, "frequency": r.frequency} for r in rows]
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def table_to_markdown(rows: Sequence[TableRow]) -> str:
    """Rank-by-language grid; the trailing keyword is dropped from names."""
    langs: list[str] = []
    cells: dict[tuple[int, str], str] = {}
    for r in rows:
        if r.language not in langs:
            langs.append(r.language)
        cells[(r.rank, r.language)] = f"{short_name(r.term)}<br>{r.frequency:,}"
    depth = max((r.rank for r in rows), default=0)
    out = ["| Rank | " + " | ".join(langs) + " |", "|---|" + "---|" * len(langs)]
    for rank in range(1, depth + 1):
        out.append(f"| {rank} | " + " | ".join(cells.get((rank, lang), "") for lang in langs) + " |")
    return "\n".join(out) + "\n"


def export_provenance(records: Iterable[AlgorithmNameRecord], limit: int | None = None) -> list[dict]:
    rows = []
    for r in records:
        prov = r.provenance if limit is None else r.provenance[:limit]
        for p in prov:
            rows.append({
                "language": r.language,
                "term": r.term,
                "source_path": p.source_path,
                "comment_id": p.comment_id,
                "excerpt": p.excerpt,
            })
    return rows


# ---------------------------------------------------------------- evaluation

class MissingLabelsError(KeyError):
    def __init__(self, terms: Sequence[str]) -> None:
        super().__init__(f"{len(terms)} predicted terms have no oracle label: {', '.join(terms[:20])}")
        self.terms = list(terms)


def read_oracle(path: str | Path) -> dict[str, str]:
    """``term,label`` CSV -> {normalised term: "valid"|"invalid"}."""
    labels: dict[str, str] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        for lineno, row in enumerate(csv.DictReader(fh), 2):
            term = " ".join(row["term"].lower().split())
            label = row["label"].strip().lower()
            if label not in (VALID, INVALID):
                raise ValueError(f"{path}:{lineno}: label must be valid or invalid, got {label!r}")
            if labels.get(term, label) != label:
                raise ValueError(f"{path}:{lineno}: conflicting labels for {term!r}")
            labels[term] = label
    return labels


def _ratio(num: int, den: int) -> float | None:
    return num / den if den else None


@dataclass(frozen=True)
class EvalReport:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def precision(self) -> float | None:
        return _ratio(self.tp, self.tp + self.fp)

    @property
    def recall(self) -> float | None:
        return _ratio(self.tp, self.tp + self.fn)

    @property
    def f_measure(self) -> float | None:
        p, r = self.precision, self.recall
        if p is None or r is None or p + r == 0:
            return None
        return 2 * p * r / (p + r)

    def to_json(self) -> dict:
        def fmt(x):
            return "n/a" if x is None else x
        return {"tp": self.tp, "fp": self.fp, "fn": self.fn, "tn": self.tn,
                "precision": fmt(self.precision), "recall": fmt(self.recall), "f_measure": fmt(self.f_measure)}

    def summary(self) -> str:
        def fmt(x):
            return "n/a" if x is None else f"{x:.4f}"
        return (f"tp={self.tp} fp={self.fp} fn={self.fn} tn={self.tn}  "
                f"precision={fmt(self.precision)} recall={fmt(self.recall)} f_measure={fmt(self.f_measure)}")


def evaluate(predictions: Iterable[AlgorithmNameRecord], oracle: Mapping[str, str]) -> EvalReport:
    preds = list(predictions)
    missing = sorted({p.term for p in preds if p.term not in oracle})
    if missing:
        raise MissingLabelsError(missing)
    tp = fp = fn = tn = 0
    for p in preds:
        gold = oracle[p.term] == VALID
        if p.verdict.valid and gold:
            tp += 1
        elif p.verdict.valid:
            fp += 1
        elif gold:
            fn += 1
        else:
            tn += 1
    return EvalReport(tp, fp, fn, tn)
