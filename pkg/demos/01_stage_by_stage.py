#!/usr/bin/env python3
# Walk a few comments through every stage by hand.

from algoname import BaselineTagger, SourceFile, classify, count_ngrams, extract_comments, select_candidates
from algoname.refine import refine
from algoname.tagging import tag_comment

src = '''
/* Sorts an array using an Insertion Sort algorithm */
void sort(int *a, int n);

// Quick sort algorithm, see Hoare 1961
// (the algorithm works in place)
void qsort2(int *a, int n);

/* Falls back to the insertion sort algorithm for short runs */
/* plain quick sort algorithm otherwise */
'''

f = SourceFile.from_text("sort.c", src)  # language from the extension
docs = extract_comments(f)
for d in docs:
    print(d.start_line, d.end_line, d.kind.value, repr(d.raw_text))

tagger = BaselineTagger()
corpus = [tag_comment(i, d.raw_text, tagger, source_path=d.source_path, language="C") for i, d in enumerate(docs, 1)]
for c in corpus:
    print(c.comment_id, list(zip(c.norms, c.labels)))

stats = count_ngrams(corpus, 6)
print("weight('insertion sort algorithm') =", round(stats.weight(("insertion", "sort", "algorithm")), 3))

occs = list(select_candidates(corpus, stats))
for o in occs:
    print("candidate", o.comment_id, o.tokens, o.pos_seq)

for g in refine(occs):
    maj = g.majority_pos
    print(" ".join(g.tokens), g.status.value, maj, classify(maj).value if maj else "-")
