"""Inclusive/exclusive POS rules deciding whether a term is an algorithm name.

``classify`` follows the reference rule procedure branch for branch,
including its quirks: the ``VERB-ing NOUN`` branch has an empty body and so
ends up invalid, ``ADJ NOUN`` is not in the inclusive list, and sequences
that reach no branch are invalid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from algoname.refine import GroupStatus, RefinedTermGroup
from algoname.tagging import VERB_ING

VALID = "valid"
INVALID = "invalid"

NOUN_VERB_NOUN = ("NOUN", "VERB", "NOUN")
VERB_ADJ_NOUN_NOUN_NOUN = ("VERB", "ADJ", "NOUN", "NOUN", "NOUN")
ADJ_NOUN_PATTERNS = frozenset({
    ("ADJ", "ADJ", "NOUN"),
    ("ADJ", "NOUN", "NOUN"),
    ("NOUN", "ADJ", "NOUN"),
    ("ADJ", "ADJ", "NOUN", "NOUN"),
    ("ADJ", "NOUN", "ADJ", "NOUN"),
})
ADV_PATTERNS = frozenset({
    ("ADV", "NOUN"),
    ("ADV", "PART", "NOUN"),
    ("ADV", "ADJ", "ADJ", "NOUN"),
    ("ADV", "ADJ", "ADJ", "NOUN", "NOUN"),
})

# Optional additions to the inclusive set (off by default).
EXTRA_INCLUSIVE: dict[str, tuple[str, ...]] = {
    "ADJ_NOUN": ("ADJ", "NOUN"),
    "VERB_ING_NOUN": (VERB_ING, "NOUN"),
}

BRANCHES = (
    "only_noun",
    "conj",
    "det",
    "verb_ing_noun",
    "noun_verb_noun",
    "verb_adj_noun_noun_noun",
    "verb_other",
    "adj_noun_pattern",
    "adj_noun_other",
    "adv_adp_noun",
    "adp_other",
    "adv_pattern",
    "adv_other",
    "default",
    "extra_inclusive",
)


@dataclass(frozen=True)
class Verdict:
    value: str
    matched_branch: str

    @property
    def valid(self) -> bool:
        return self.value == VALID


def classify(pos_seq: Sequence[str], extra_inclusive: Iterable[str] = ()) -> Verdict:
    seq = tuple(pos_seq)
    if not seq:
        raise ValueError("cannot classify an empty POS sequence")
    for label in extra_inclusive:
        if label not in EXTRA_INCLUSIVE:
            raise ValueError(f"unknown inclusive pattern {label!r}; known: {sorted(EXTRA_INCLUSIVE)}")
        if seq == EXTRA_INCLUSIVE[label]:
            return Verdict(VALID, "extra_inclusive")

    tags = set(seq)
    if tags == {"NOUN"}:
        return Verdict(VALID, "only_noun")
    if "CONJ" in tags:
        return Verdict(INVALID, "conj")
    if "DET" in tags:
        return Verdict(INVALID, "det")
    if "VERB" in tags or VERB_ING in tags:
        if seq == (VERB_ING, "NOUN"):
            return Verdict(INVALID, "verb_ing_noun")  # empty branch body
        if seq == NOUN_VERB_NOUN:
            return Verdict(VALID, "noun_verb_noun")
        if seq == VERB_ADJ_NOUN_NOUN_NOUN:
            return Verdict(VALID, "verb_adj_noun_noun_noun")
        return Verdict(INVALID, "verb_other")
    if tags == {"ADJ", "NOUN"}:
        if seq in ADJ_NOUN_PATTERNS:
            return Verdict(VALID, "adj_noun_pattern")
        return Verdict(INVALID, "adj_noun_other")
    if "ADP" in tags:
        if seq == ("ADV", "ADP", "NOUN"):
            return Verdict(VALID, "adv_adp_noun")
        return Verdict(INVALID, "adp_other")
    if "ADV" in tags:
        if seq in ADV_PATTERNS:
            return Verdict(VALID, "adv_pattern")
        return Verdict(INVALID, "adv_other")
    return Verdict(INVALID, "default")


def classify_group(group: RefinedTermGroup, extra_inclusive: Iterable[str] = ()):
    """AlgorithmNameRecord for a group with a majority POS, else None."""
    from algoname.report import AlgorithmNameRecord, Provenance

    if group.status is not GroupStatus.HAS_MAJORITY:
        return None
    majority = group.majority_pos
    verdict = classify(majority, extra_inclusive)
    prov = [Provenance.from_occurrence(o) for o in group.occurrences]
    return AlgorithmNameRecord(group.tokens, majority, verdict, len(prov), group.language, prov)
