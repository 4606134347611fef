"""BIO token-label encoding of concept mentions.

Labels are O plus B_<role> / I_<role> for the five concept roles (11
classes total). Example: "we conduct network analysis to graph data" with
a method mention on tokens 2-3 and a data mention on tokens 5-6 encodes as
<O, O, B_method, I_method, O, B_data, I_data>.
"""

from __future__ import annotations

import logging
from typing import IO, Iterable, Sequence

from ..errors import BioFormatError, OverlappingMentionsError
from .candidates import CandidateSpan
from .labels import ConceptLabel
from .samples import WeakSample
from .tokens import TaggedToken

log = logging.getLogger(__name__)

OUTSIDE = "O"

Mention = tuple[CandidateSpan, ConceptLabel]


def bio_label_universe() -> list[str]:
    """The 11 BIO classes in deterministic order."""
    out = [OUTSIDE]
    for label in ConceptLabel:
        out.append(f"B_{label.value}")
        out.append(f"I_{label.value}")
    return out


def to_bio(tokens: Sequence[TaggedToken], mentions: Iterable[Mention]) -> list[str]:
    """Encode non-overlapping mentions; uncovered tokens become O."""
    labels = [OUTSIDE] * len(tokens)
    claimed: dict[int, CandidateSpan] = {}
    for span, label in mentions:
        if span.end >= len(tokens):
            raise ValueError(f"span [{span.start}, {span.end}] exceeds document length {len(tokens)}")
        for idx in range(span.start, span.end + 1):
            if idx in claimed:
                raise OverlappingMentionsError(
                    f"token {idx} claimed by both [{claimed[idx].start}, {claimed[idx].end}] "
                    f"and [{span.start}, {span.end}]"
                )
            claimed[idx] = span
        labels[span.start] = f"B_{label.value}"
        for idx in range(span.start + 1, span.end + 1):
            labels[idx] = f"I_{label.value}"
    return labels


def _split(label: str) -> tuple[str, ConceptLabel | None]:
    if label == OUTSIDE:
        return OUTSIDE, None
    if len(label) > 2 and label[0] in "BI" and label[1] == "_":
        return label[0], ConceptLabel.from_value(label[2:])
    raise BioFormatError(f"unrecognized BIO label: {label!r}")


def from_bio(
    tokens: Sequence[TaggedToken], labels: Sequence[str], strict: bool = True
) -> list[Mention]:
    """Decode maximal B_x (I_x)* runs back into mentions.

    A dangling I_x (at sequence start, after O, or after a different role)
    is an error in strict mode and is coerced to B_x otherwise (logged).
    """
    if len(labels) != len(tokens):
        raise BioFormatError(f"{len(labels)} labels for {len(tokens)} tokens")
    mentions: list[Mention] = []
    start: int | None = None
    current: ConceptLabel | None = None

    def flush(end: int):
        nonlocal start, current
        if start is not None:
            assert current is not None
            surface = " ".join(t.text for t in tokens[start : end + 1])
            mentions.append((CandidateSpan(start=start, end=end, surface=surface), current))
        start, current = None, None

    for idx, raw in enumerate(labels):
        prefix, role = _split(raw)
        if prefix == OUTSIDE:
            flush(idx - 1)
        elif prefix == "B":
            flush(idx - 1)
            start, current = idx, role
        else:  # I
            if current is not role or start is None:
                if strict:
                    raise BioFormatError(
                        f"dangling I_{role.value} at token {idx}"  # type: ignore[union-attr]
                    )
                log.warning("coercing dangling I_%s at token %d to B", role.value, idx)  # type: ignore[union-attr]
                flush(idx - 1)
                start, current = idx, role
    flush(len(labels) - 1)
    return mentions


def resolve_overlaps(samples: Iterable[WeakSample]) -> list[WeakSample]:
    """Drop overlapping mentions within one document.

    Preference order: higher probability, then longer span, then earlier
    start. Survivors come back sorted by span start.
    """
    ranked = sorted(
        samples, key=lambda s: (-s.probability, -s.span.length, s.span.start)
    )
    taken: set[int] = set()
    kept: list[WeakSample] = []
    for sample in ranked:
        covered = set(range(sample.span.start, sample.span.end + 1))
        if covered & taken:
            continue
        taken |= covered
        kept.append(sample)
    kept.sort(key=lambda s: s.span.start)
    return kept


def write_bio_dataset(
    documents: Iterable[tuple[Sequence[TaggedToken], Sequence[str]]], sink: IO[str]
) -> int:
    """CoNLL-style export: "token label" lines, blank line between documents."""
    n = 0
    first = True
    for tokens, labels in documents:
        if len(tokens) != len(labels):
            raise BioFormatError(f"{len(labels)} labels for {len(tokens)} tokens")
        if not first:
            sink.write("\n")
        for token, label in zip(tokens, labels):
            sink.write(f"{token.text} {label}\n")
        first = False
        n += 1
    return n
