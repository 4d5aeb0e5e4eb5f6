"""Command line entry point: one subcommand per stage plus ``run``.

Exit codes: 0 success, 1 usage error, 2 stage failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from algoname.corpus import Language
from algoname.pipeline import (
    PipelineConfig,
    StageError,
    load_records,
    read_denylist,
    render_report,
    run_pipeline,
    stage_classify,
    stage_extract,
    stage_mine,
    stage_refine,
    stage_scan,
    stage_tag,
    write_jsonl,
)
from algoname.report import MissingLabelsError, evaluate, export_provenance, read_oracle
from algoname.rules import EXTRA_INCLUSIVE

LOG_ENV = "ALGONAME_LOG_LEVEL"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _languages(value: str) -> list[Language]:
    try:
        return [Language.parse(x) for x in value.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="algoname", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("scan", help="list source files under a directory")
    s.add_argument("root")
    s.add_argument("--lang", type=_languages, help="comma-separated languages (default: all)")
    s.add_argument("--out", required=True)

    s = sub.add_parser("extract", help="extract comments from scanned files")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--no-docstrings", action="store_true", help="do not count Python docstrings as comments")

    s = sub.add_parser("tag", help="clean, tokenize and POS-tag comments")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--sidecar", help="externally produced tags (#id blocks of token<TAB>TAG)")
    s.add_argument("--match-plural", action="store_true")

    s = sub.add_parser("mine", help="select n-gram candidates ending in 'algorithm'")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--min-df", type=int, default=2)
    s.add_argument("--match-plural", action="store_true")
    s.add_argument("--stats-dir", help="write per-language ngram,df,sdf,weight CSV files here")

    s = sub.add_parser("refine", help="strip head words, keep longest spans, vote on POS")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out", required=True)

    s = sub.add_parser("classify", help="apply the inclusive/exclusive POS rules")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--extra-inclusive", nargs="*", default=[], choices=sorted(EXTRA_INCLUSIVE))

    s = sub.add_parser("report", help="rank valid names by frequency")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--top", type=int, default=10)
    s.add_argument("--by-language", action="store_true")
    s.add_argument("--format", choices=("csv", "json", "md"), default="csv")
    s.add_argument("--denylist", help="file with one term per line to leave out")
    s.add_argument("--out", help="write here instead of stdout")

    s = sub.add_parser("provenance", help="list the comments behind each valid name")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--limit", type=int, help="rows per name")
    s.add_argument("--all", action="store_true", help="include names judged invalid")

    s = sub.add_parser("eval", help="precision/recall/F against a term,label CSV")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--oracle", required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("run", help="run every stage over a directory")
    s.add_argument("root")
    s.add_argument("--config", help="TOML file with PipelineConfig keys")
    s.add_argument("--out", default="algoname-out")
    s.add_argument("--lang", type=_languages)
    s.add_argument("--max-n", type=int)
    s.add_argument("--min-df", type=int)
    s.add_argument("--no-docstrings", dest="docstrings", action="store_const", const=False)
    s.add_argument("--extra-inclusive", nargs="*", choices=sorted(EXTRA_INCLUSIVE))
    s.add_argument("--denylist")
    s.add_argument("--sidecar")
    s.add_argument("--match-plural", action="store_const", const=True)
    s.add_argument("--top", type=int)
    return p


def _keywords(match_plural: bool) -> tuple[str, ...]:
    return PipelineConfig(match_plural=match_plural).keywords


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "scan":
        n, skips = stage_scan(args.root, args.out, args.lang)
        print(f"{n} files ({len(skips)} skipped)", file=sys.stderr)
    elif cmd == "extract":
        n = stage_extract(args.inp, args.out, docstrings=not args.no_docstrings)
        print(f"{n} comments", file=sys.stderr)
    elif cmd == "tag":
        n = stage_tag(args.inp, args.out, args.sidecar, _keywords(args.match_plural))
        print(f"{n} tagged comments", file=sys.stderr)
    elif cmd == "mine":
        if not 2 <= args.max_n <= 8 or args.min_df < 1:
            raise UsageError("--max-n must be in [2, 8] and --min-df >= 1")
        n = stage_mine(args.inp, args.out, max_n=args.max_n, min_df=args.min_df,
                       keywords=_keywords(args.match_plural), stats_dir=args.stats_dir)
        print(f"{n} candidate occurrences", file=sys.stderr)
    elif cmd == "refine":
        n = stage_refine(args.inp, args.out)
        print(f"{n} term groups", file=sys.stderr)
    elif cmd == "classify":
        n = stage_classify(args.inp, args.out, args.extra_inclusive)
        print(f"{n} classified names", file=sys.stderr)
    elif cmd == "report":
        text = render_report(load_records(args.inp), top_k=args.top, by_language=args.by_language,
                             fmt=args.format, denylist=read_denylist(args.denylist))
        _emit(text, args.out)
    elif cmd == "provenance":
        records = [r for r in load_records(args.inp) if args.all or r.verdict.valid]
        for row in export_provenance(records, args.limit):
            print(json.dumps(row, ensure_ascii=False))
    elif cmd == "eval":
        rep = evaluate(load_records(args.inp), read_oracle(args.oracle))
        print(json.dumps(rep.to_json(), indent=2) if args.json else rep.summary())
    elif cmd == "run":
        try:
            base = PipelineConfig.from_file(args.config) if args.config else PipelineConfig()
            cfg = PipelineConfig.from_mapping({
                "languages": args.lang,
                "max_n": args.max_n,
                "min_df": args.min_df,
                "docstrings": args.docstrings,
                "extra_inclusive": args.extra_inclusive,
                "denylist_path": args.denylist,
                "sidecar_path": args.sidecar,
                "match_plural": args.match_plural,
                "top_k": args.top,
            }, base)
        except (ValueError, OSError) as exc:
            raise UsageError(str(exc)) from exc
        summary = run_pipeline(args.root, cfg, args.out)
        print(json.dumps(summary.to_json(), indent=2))
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get(LOG_ENV, "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except UsageError as exc:
        print(f"algoname: error: {exc}", file=sys.stderr)
        return 1
    except MissingLabelsError as exc:
        print(f"algoname eval: {exc.args[0]}", file=sys.stderr)
        return 2
    except StageError as exc:
        print(f"algoname: stage failed: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"algoname {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
