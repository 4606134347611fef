"""Noun n-gram candidate extraction over POS-tagged tokens.

Candidates are the spans a weak labeler will score: maximal token runs
matching ``(ADJ|NOUN|PROPN)* (NOUN|PROPN)`` plus every noun-terminated
sub-span of such a run up to a length cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tokens import PosTag, TaggedToken

DEFAULT_MAX_SPAN_LEN = 6

_CHUNKABLE = {PosTag.ADJ, PosTag.NOUN, PosTag.PROPN}
_NOMINAL = {PosTag.NOUN, PosTag.PROPN}


@dataclass(frozen=True, order=True)
class CandidateSpan:
    """Inclusive token span [start, end] with its joined surface text."""

    start: int
    end: int
    surface: str

    def __post_init__(self):
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"invalid span [{self.start}, {self.end}]")

    @property
    def length(self) -> int:
        return self.end - self.start + 1


def _surface(tokens: list[TaggedToken], start: int, end: int) -> str:
    return " ".join(t.text for t in tokens[start : end + 1])


def extract_candidates(
    tokens: list[TaggedToken], max_len: int = DEFAULT_MAX_SPAN_LEN
) -> list[CandidateSpan]:
    """Enumerate candidate noun-phrase spans.

    A maximal run is the longest stretch of ADJ/NOUN/PROPN tokens trimmed to
    end on its last NOUN/PROPN. Each maximal run is always a candidate;
    additionally every sub-span inside a run that ends on a NOUN/PROPN and
    spans at most ``max_len`` tokens is one too. Deduplicated by (start, end)
    and sorted by start then end.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    spans: set[tuple[int, int]] = set()
    n = len(tokens)
    i = 0
    while i < n:
        if tokens[i].pos not in _CHUNKABLE:
            i += 1
            continue
        j = i
        while j + 1 < n and tokens[j + 1].pos in _CHUNKABLE:
            j += 1
        # trim trailing adjectives so the run ends on a nominal token
        end = j
        while end >= i and tokens[end].pos not in _NOMINAL:
            end -= 1
        if end >= i:
            spans.add((i, end))
            for a in range(i, end + 1):
                for b in range(a, min(a + max_len, end + 1)):
                    if tokens[b].pos in _NOMINAL:
                        spans.add((a, b))
        i = j + 1
    return [
        CandidateSpan(start=a, end=b, surface=_surface(tokens, a, b))
        for a, b in sorted(spans)
    ]
