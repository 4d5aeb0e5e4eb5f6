#!/usr/bin/env python3
# Mine a source tree end to end and show the per-language table.
# usage: python demos/03_mine_a_tree.py [root] [out]

import sys
import tempfile
from pathlib import Path

from algoname import PipelineConfig, run_pipeline
from algoname.pipeline import load_records

root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent.parent / "fixtures" / "mini_corpus"
out = Path(sys.argv[2]) if len(sys.argv) > 2 else Path(tempfile.mkdtemp(prefix="algoname-"))

summary = run_pipeline(root, PipelineConfig(min_df=2), out)
print(summary.counts)
print((out / "report.md").read_text())

# where each name came from
for r in load_records(out / "names.jsonl"):
    if r.verdict.valid:
        for p in r.provenance[:1]:
            print(f"{r.language:10} {p.source_path:28} {p.excerpt}")

print("intermediate files in", out)
