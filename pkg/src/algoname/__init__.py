"""Mine algorithm names ("... algorithm") from source-code comments."""

from algoname.corpus import Language, SourceFile, detect_language, scan_tree
from algoname.comments import CommentDoc, extract_comments
from algoname.tagging import BaselineTagger, TaggedComment, TaggedToken, clean_text, tag_tokens, tokenize
from algoname.mining import CandidateOccurrence, NgramStats, NgramTerm, count_ngrams, select_candidates
from algoname.refine import RefinedTermGroup, group_and_vote, keep_longest, strip_head
from algoname.rules import Verdict, classify, classify_group
from algoname.report import AlgorithmNameRecord, EvalReport, build_frequency_table, evaluate, export_provenance
from algoname.pipeline import PipelineConfig, run_pipeline

__version__ = "0.1.0"

__all__ = [
    "AlgorithmNameRecord",
    "BaselineTagger",
    "CandidateOccurrence",
    "CommentDoc",
    "EvalReport",
    "Language",
    "NgramStats",
    "NgramTerm",
    "PipelineConfig",
    "RefinedTermGroup",
    "SourceFile",
    "TaggedComment",
    "TaggedToken",
    "Verdict",
    "build_frequency_table",
    "classify",
    "classify_group",
    "clean_text",
    "count_ngrams",
    "detect_language",
    "evaluate",
    "export_provenance",
    "extract_comments",
    "group_and_vote",
    "keep_longest",
    "run_pipeline",
    "scan_tree",
    "select_candidates",
    "strip_head",
    "tag_tokens",
    "tokenize",
]
