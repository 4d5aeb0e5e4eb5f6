"""Head-word stripping, longest-match filtering and majority POS voting."""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from algoname.mining import CandidateOccurrence
from algoname.tagging import VERB_ING

HEAD_SINGLE = frozenset({"ADP", "NUM", "DET"})


def _is_verb(label: str) -> bool:
    return label in ("VERB", VERB_ING)


def strip_head(occ: CandidateOccurrence) -> CandidateOccurrence | None:
    """Drop leading (VERB ADP) pairs and ADP/NUM/DET words until none is left.

    Returns None when fewer than two tokens survive.
    """
    k = 0
    pos = occ.pos_seq
    while k < len(pos):
        if k + 1 < len(pos) and _is_verb(pos[k]) and pos[k + 1] == "ADP":
            k += 2
        elif pos[k] in HEAD_SINGLE:
            k += 1
        else:
            break
    if len(pos) - k < 2:
        return None
    if k == 0:
        return occ
    return replace(occ, start=occ.start + k, tokens=occ.tokens[k:], pos_seq=pos[k:])


def keep_longest(occs: Iterable[CandidateOccurrence]) -> list[CandidateOccurrence]:
    """Within one comment, drop duplicates and spans nested in a longer span."""
    unique: dict[tuple[int, int], CandidateOccurrence] = {}
    for o in occs:
        unique.setdefault(o.span, o)
    spans = sorted(unique, key=lambda s: (s[0], -(s[1] - s[0])))
    kept = []
    for s in spans:
        if any(o[0] <= s[0] and s[1] <= o[1] for o in kept):
            continue
        kept.append(s)
    return [unique[s] for s in sorted(kept)]


class GroupStatus(str, enum.Enum):
    HAS_MAJORITY = "has_majority"
    NO_MAJORITY = "no_majority"
    SINGLETON = "singleton"


@dataclass
class RefinedTermGroup:
    tokens: tuple[str, ...]
    occurrences: list[CandidateOccurrence] = field(default_factory=list)
    language: str = ""

    @property
    def pos_counts(self) -> Counter[tuple[str, ...]]:
        return Counter(o.pos_seq for o in self.occurrences)

    @property
    def majority_pos(self) -> tuple[str, ...] | None:
        total = len(self.occurrences)
        if total < 2:
            return None
        seq, count = max(self.pos_counts.items(), key=lambda kv: (kv[1], kv[0]))
        return seq if 2 * count > total else None

    @property
    def status(self) -> GroupStatus:
        if len(self.occurrences) == 1:
            return GroupStatus.SINGLETON
        return GroupStatus.HAS_MAJORITY if self.majority_pos else GroupStatus.NO_MAJORITY

    def to_json(self) -> dict:
        maj = self.majority_pos
        return {
            "language": self.language,
            "tokens": list(self.tokens),
            "status": self.status.value,
            "majority_pos": list(maj) if maj else None,
            "occurrences": [o.to_json() for o in self.occurrences],
        }

    @classmethod
    def from_json(cls, d: Mapping) -> "RefinedTermGroup":
        return cls(tuple(d["tokens"]), [CandidateOccurrence.from_json(o) for o in d["occurrences"]],
                   d.get("language", ""))


def group_and_vote(occs: Iterable[CandidateOccurrence]) -> list[RefinedTermGroup]:
    """Group occurrences by (language, token sequence); order is deterministic."""
    buckets: defaultdict[tuple[str, tuple[str, ...]], list[CandidateOccurrence]] = defaultdict(list)
    for o in occs:
        buckets[(o.language, o.tokens)].append(o)
    groups = []
    for (lang, toks) in sorted(buckets):
        members = sorted(buckets[(lang, toks)], key=lambda o: (o.comment_id, o.start))
        groups.append(RefinedTermGroup(toks, members, lang))
    return groups


def refine(occs: Iterable[CandidateOccurrence]) -> list[RefinedTermGroup]:
    """Strip heads, keep longest spans per comment, then group and vote."""
    by_comment: defaultdict[int, list[CandidateOccurrence]] = defaultdict(list)
    for o in occs:
        s = strip_head(o)
        if s is not None:
            by_comment[s.comment_id].append(s)
    survivors = []
    for cid in sorted(by_comment):
        survivors.extend(keep_longest(by_comment[cid]))
    return group_and_vote(survivors)
