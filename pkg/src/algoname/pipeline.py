"""Stage wiring over line-delimited JSON intermediate files."""

from __future__ import annotations

import json
import logging
import os
from collections import defaultdict
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Iterable, Iterator, Mapping

from algoname.comments import extract_comments, number_comments
from algoname.corpus import Language, SkipReport, SourceFile, content_hash, scan_tree
from algoname.mining import CandidateOccurrence, count_ngrams, select_candidates
from algoname.refine import RefinedTermGroup, refine
from algoname.report import (
    AlgorithmNameRecord,
    build_frequency_table,
    export_provenance,
    table_to_csv,
    table_to_json,
    table_to_markdown,
)
from algoname.rules import EXTRA_INCLUSIVE, classify_group
from algoname.tagging import KEYWORD, BaselineTagger, TaggedComment, import_sidecar_tags, tag_comment

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

log = logging.getLogger(__name__)


class StageError(RuntimeError):
    def __init__(self, stage: str, message: str, record: Any = None) -> None:
        where = f" (record {record})" if record is not None else ""
        super().__init__(f"{stage}: {message}{where}")
        self.stage = stage
        self.record = record


# ---------------------------------------------------------------- config

@dataclass(frozen=True)
class PipelineConfig:
    languages: frozenset[Language] = frozenset(Language)
    max_n: int = 6
    min_df: int = 2
    docstrings: bool = True
    extra_inclusive: frozenset[str] = frozenset()
    denylist_path: str | None = None
    sidecar_path: str | None = None
    match_plural: bool = False
    top_k: int = 10

    def __post_init__(self) -> None:
        if not 2 <= self.max_n <= 8:
            raise ValueError(f"max_n must be in [2, 8], got {self.max_n}")
        if self.min_df < 1:
            raise ValueError(f"min_df must be >= 1, got {self.min_df}")
        unknown = set(self.extra_inclusive) - set(EXTRA_INCLUSIVE)
        if unknown:
            raise ValueError(f"unknown extra_inclusive patterns: {sorted(unknown)}")

    @property
    def keywords(self) -> tuple[str, ...]:
        return (KEYWORD, KEYWORD + "s") if self.match_plural else (KEYWORD,)

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any], base: "PipelineConfig | None" = None) -> "PipelineConfig":
        """Overlay ``values`` (None entries ignored) on ``base`` or the defaults."""
        known = {f.name for f in fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        current = {f.name: getattr(base, f.name) for f in fields(cls)} if base else {}
        for k, v in values.items():
            if v is None:
                continue
            if k == "languages":
                v = frozenset(Language.parse(x) if isinstance(x, str) else x for x in _as_list(v))
            elif k == "extra_inclusive":
                v = frozenset(_as_list(v))
            current[k] = v
        return cls(**current)

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> "PipelineConfig":
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
        return cls.from_mapping(data)


def _as_list(v) -> list:
    if isinstance(v, str):
        return [x for x in (s.strip() for s in v.split(",")) if x]
    return list(v)


# ---------------------------------------------------------------- jsonl helpers

def write_jsonl(path: str | os.PathLike, records: Iterable[Mapping]) -> int:
    n = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for r in records:
            fh.write(json.dumps(r, ensure_ascii=False) + "\n")
            n += 1
    return n


def read_jsonl(path: str | os.PathLike) -> Iterator[dict]:
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if line.strip():
                try:
                    yield json.loads(line)
                except json.JSONDecodeError as exc:
                    raise ValueError(f"{path}:{lineno}: {exc}") from None


# ---------------------------------------------------------------- stages

def stage_scan(root: str | os.PathLike, out: str | os.PathLike,
               languages: Iterable[Language] | None = None) -> tuple[int, SkipReport]:
    skips = SkipReport()
    root_s = Path(root).as_posix()
    recs = (
        {"root": root_s, "path": f.path, "language": f.language.value, "content_hash": f.content_hash}
        for f in scan_tree(root, languages, skips)
    )
    return write_jsonl(out, recs), skips


def _load_sources(sources: str | os.PathLike) -> Iterator[SourceFile]:
    for rec in read_jsonl(sources):
        full = Path(rec["root"]) / rec["path"]
        try:
            data = full.read_bytes()
        except OSError as exc:
            log.warning("skipping %s: %s", full, exc)
            continue
        if content_hash(data) != rec["content_hash"]:
            log.warning("%s changed since it was scanned", full)
        yield SourceFile.from_bytes(rec["path"], Language(rec["language"]), data)


def stage_extract(sources: str | os.PathLike, out: str | os.PathLike, docstrings: bool = True) -> int:
    docs = []
    for f in _load_sources(sources):
        try:
            docs.extend(extract_comments(f, docstrings=docstrings))
        except Exception as exc:
            raise StageError("extract", str(exc), f.path) from exc
    recs = (
        {"path": d.source_path, "language": d.language.value, "comment_id": d.comment_id, "text": d.raw_text,
         "start_line": d.start_line, "end_line": d.end_line, "kind": d.kind.value}
        for d in number_comments(docs)
    )
    return write_jsonl(out, recs)


def stage_tag(comments: str | os.PathLike, out: str | os.PathLike, sidecar: str | None = None,
              keywords: Iterable[str] = (KEYWORD,)) -> int:
    keywords = tuple(keywords)
    tagger = BaselineTagger(keywords)
    tagged: dict[int, TaggedComment] = {}
    for lineno, rec in enumerate(read_jsonl(comments), 1):
        cid = rec.get("comment_id", f"line {lineno}")
        try:
            tagged[cid] = tag_comment(cid, rec["text"], tagger, source_path=rec["path"],
                                      language=rec["language"], keywords=keywords)
        except (KeyError, TypeError, ValueError) as exc:
            raise StageError("tag", f"bad comment record: {exc!r}", cid) from exc
    if sidecar:
        try:
            n = import_sidecar_tags(tagged, sidecar, keywords)
        except ValueError as exc:
            raise StageError("tag", str(exc)) from exc
        log.info("imported sidecar tags for %d comments", n)
    return write_jsonl(out, (tagged[k].to_json() for k in sorted(tagged)))


def stage_mine(tagged: str | os.PathLike, out: str | os.PathLike, *, max_n: int = 6, min_df: int = 2,
               keywords: Iterable[str] = (KEYWORD,), stats_dir: str | os.PathLike | None = None) -> int:
    """Statistics and candidates are computed per language corpus."""
    keywords = tuple(keywords)
    by_lang: defaultdict[str, list[TaggedComment]] = defaultdict(list)
    for rec in read_jsonl(tagged):
        c = TaggedComment.from_json(rec)
        by_lang[c.language].append(c)
    occs: list[CandidateOccurrence] = []
    for lang in sorted(by_lang):
        corpus = by_lang[lang]
        stats = count_ngrams(corpus, max_n, only_last=keywords)
        if stats_dir is not None:
            Path(stats_dir).mkdir(parents=True, exist_ok=True)
            stats.write_csv(Path(stats_dir) / f"{lang}.csv")
        occs.extend(select_candidates(corpus, stats, min_df=min_df, keywords=keywords))
    return write_jsonl(out, (o.to_json() for o in occs))


def stage_refine(candidates: str | os.PathLike, out: str | os.PathLike) -> int:
    occs = [CandidateOccurrence.from_json(r) for r in read_jsonl(candidates)]
    return write_jsonl(out, (g.to_json() for g in refine(occs)))


def stage_classify(groups: str | os.PathLike, out: str | os.PathLike,
                   extra_inclusive: Iterable[str] = ()) -> int:
    extra = tuple(sorted(extra_inclusive))
    records = []
    for rec in read_jsonl(groups):
        g = RefinedTermGroup.from_json(rec)
        try:
            r = classify_group(g, extra)
        except ValueError as exc:
            raise StageError("classify", str(exc), " ".join(g.tokens)) from exc
        if r is not None:
            records.append(r)
    return write_jsonl(out, (r.to_json() for r in records))


def load_records(names: str | os.PathLike) -> list[AlgorithmNameRecord]:
    return [AlgorithmNameRecord.from_json(r) for r in read_jsonl(names)]


def read_denylist(path: str | os.PathLike | None) -> list[str]:
    if not path:
        return []
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]


def render_report(records: Iterable[AlgorithmNameRecord], *, top_k: int | None = 10, by_language: bool = True,
                  fmt: str = "csv", denylist: Iterable[str] = ()) -> str:
    rows = build_frequency_table(records, top_k, by_language=by_language, denylist=denylist)
    if fmt == "csv":
        return table_to_csv(rows)
    if fmt == "json":
        return table_to_json(rows)
    if fmt == "md":
        return table_to_markdown(rows)
    raise ValueError(f"unknown report format {fmt!r}")


# ---------------------------------------------------------------- one-shot run

FILES = {
    "sources": "sources.jsonl",
    "comments": "comments.jsonl",
    "tagged": "tagged.jsonl",
    "candidates": "candidates.jsonl",
    "groups": "groups.jsonl",
    "names": "names.jsonl",
    "report_csv": "report.csv",
    "report_md": "report.md",
    "provenance": "provenance.jsonl",
    "summary": "summary.json",
}


@dataclass
class RunSummary:
    counts: dict[str, int] = field(default_factory=dict)
    outputs: dict[str, str] = field(default_factory=dict)
    valid_names: list[str] = field(default_factory=list)
    skipped_files: int = 0

    def to_json(self) -> dict:
        return {"counts": self.counts, "outputs": self.outputs, "valid_names": self.valid_names,
                "skipped_files": self.skipped_files}


def run_pipeline(root: str | os.PathLike, config: PipelineConfig | None = None,
                 out_dir: str | os.PathLike = "algoname-out") -> RunSummary:
    """scan -> extract -> tag -> mine -> refine -> classify -> report, writing every intermediate."""
    cfg = config or PipelineConfig()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    p = {k: out / v for k, v in FILES.items()}
    s = RunSummary(outputs={k: v for k, v in FILES.items()})

    def stage(name, fn, *args, **kw):
        log.info("stage %s", name)
        try:
            return fn(*args, **kw)
        except StageError:
            raise
        except (OSError, ValueError, KeyError) as exc:
            raise StageError(name, str(exc)) from exc

    n_files, skips = stage("scan", stage_scan, root, p["sources"], sorted(cfg.languages, key=lambda x: x.value))
    s.counts["files"] = n_files
    s.skipped_files = len(skips)
    s.counts["comments"] = stage("extract", stage_extract, p["sources"], p["comments"], cfg.docstrings)
    s.counts["tagged"] = stage("tag", stage_tag, p["comments"], p["tagged"], cfg.sidecar_path, cfg.keywords)
    s.counts["candidates"] = stage("mine", stage_mine, p["tagged"], p["candidates"], max_n=cfg.max_n,
                                   min_df=cfg.min_df, keywords=cfg.keywords, stats_dir=out / "stats")
    s.counts["groups"] = stage("refine", stage_refine, p["candidates"], p["groups"])
    s.counts["names"] = stage("classify", stage_classify, p["groups"],
                              p["names"], cfg.extra_inclusive)

    records = load_records(p["names"])
    deny = read_denylist(cfg.denylist_path)
    p["report_csv"].write_text(render_report(records, top_k=cfg.top_k, fmt="csv", denylist=deny), encoding="utf-8")
    p["report_md"].write_text(render_report(records, top_k=cfg.top_k, fmt="md", denylist=deny), encoding="utf-8")
    write_jsonl(p["provenance"], export_provenance(r for r in records if r.verdict.valid))
    s.counts["valid_names"] = sum(1 for r in records if r.verdict.valid)
    s.valid_names = sorted({r.term for r in records if r.verdict.valid})
    p["summary"].write_text(json.dumps(s.to_json(), indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return s
