#!/usr/bin/env python3
# The rule table and the majority vote, on the textbook cases.

from algoname import classify
from algoname.mining import CandidateOccurrence
from algoname.refine import RefinedTermGroup

for seq in ["NOUN NOUN", "ADJ NOUN NOUN", "ADJ NOUN", "VERB-ing NOUN", "NOUN VERB NOUN",
            "DET NOUN", "ADV ADP NOUN", "PRON NOUN"]:
    v = classify(seq.split())
    print(f"{seq:18} {v.value:8} {v.matched_branch}")

# ADJ NOUN ("greedy algorithm") is off by default; it can be switched on
print(classify(["ADJ", "NOUN"], ["ADJ_NOUN"]))


def group(term, *pos):
    toks = tuple(term.split())
    return RefinedTermGroup(toks, [CandidateOccurrence(i, 0, len(toks), toks, tuple(p.split())) for i, p in enumerate(pos)])


sort = group("sort algorithm", "NOUN NOUN", "NOUN NOUN", "NOUN NOUN", "VERB NOUN")
blur = group("blur algorithm", "NOUN NOUN", "ADJ NOUN")
once = group("md5 algorithm", "NOUN NOUN")
for g in (sort, blur, once):
    print(" ".join(g.tokens), dict(g.pos_counts), g.status.value, g.majority_pos)
