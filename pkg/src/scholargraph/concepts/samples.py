"""Weak training samples: selection and line-delimited JSON export."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable

from .candidates import CandidateSpan
from .labels import ConceptLabel


@dataclass(frozen=True)
class WeakSample:
    """One (document, span, label, probability) weak-labeling outcome."""

    document_id: str
    span: CandidateSpan
    label: ConceptLabel
    probability: float

    def __post_init__(self):
        if not 0.0 <= self.probability <= 1.0:
            raise ValueError(f"probability {self.probability} outside [0, 1]")


def select_high_confidence(
    samples: Iterable[WeakSample], k: int
) -> dict[ConceptLabel, list[WeakSample]]:
    """Top-k samples per label by probability.

    Ties break by (document_id, span start) ascending; labels with fewer
    than k samples keep all of them.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    by_label: dict[ConceptLabel, list[WeakSample]] = {label: [] for label in ConceptLabel}
    for sample in samples:
        by_label[sample.label].append(sample)
    out: dict[ConceptLabel, list[WeakSample]] = {}
    for label, group in by_label.items():
        group.sort(key=lambda s: (-s.probability, s.document_id, s.span.start))
        out[label] = group[:k]
    return out


def write_weak_samples(samples: Iterable[WeakSample], sink: IO[str]) -> int:
    """One JSON object per line: doc_id, start, end, surface, label, probability."""
    n = 0
    for s in samples:
        sink.write(
            json.dumps(
                {
                    "doc_id": s.document_id,
                    "start": s.span.start,
                    "end": s.span.end,
                    "surface": s.span.surface,
                    "label": s.label.value,
                    "probability": s.probability,
                },
                ensure_ascii=False,
            )
            + "\n"
        )
        n += 1
    return n


def read_weak_samples(source: IO[str]) -> list[WeakSample]:
    out = []
    for line in source:
        line = line.strip()
        if not line:
            continue
        obj = json.loads(line)
        out.append(
            WeakSample(
                document_id=obj["doc_id"],
                span=CandidateSpan(start=obj["start"], end=obj["end"], surface=obj["surface"]),
                label=ConceptLabel.from_value(obj["label"]),
                probability=obj["probability"],
            )
        )
    return out
