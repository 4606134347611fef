"""Concept mention extraction, weak labeling, BIO encoding, and metrics."""

from .labels import ConceptLabel, QuestionSet, default_question_set
from .tokens import PosTag, TaggedToken, tag_tokens, tokenize
from .candidates import CandidateSpan, extract_candidates
from .scoring import (
    ScoreRow,
    SpanScoreTable,
    assign_label,
    reference_span_scorer,
    score_document,
    span_probability,
)
from .samples import WeakSample, read_weak_samples, select_high_confidence, write_weak_samples
from .bio import from_bio, to_bio, write_bio_dataset
from .metrics import LabelScore, TokenF1Report, cross_entropy, token_f1

__all__ = [
    "ConceptLabel",
    "QuestionSet",
    "default_question_set",
    "PosTag",
    "TaggedToken",
    "tokenize",
    "tag_tokens",
    "CandidateSpan",
    "extract_candidates",
    "ScoreRow",
    "SpanScoreTable",
    "span_probability",
    "assign_label",
    "score_document",
    "reference_span_scorer",
    "WeakSample",
    "select_high_confidence",
    "write_weak_samples",
    "read_weak_samples",
    "to_bio",
    "from_bio",
    "write_bio_dataset",
    "token_f1",
    "cross_entropy",
    "TokenF1Report",
    "LabelScore",
]
