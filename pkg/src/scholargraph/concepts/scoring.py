"""Span scoring and weak label assignment.

A question-answering scorer produces, per question, one softmax vector of
start scores and one of end scores over the document tokens. The
probability that span [i, j] answers a question is then

    p(i, j) = softmax over admissible spans of (start[i] * end[j])

evaluated at (i, j), where admissible means i <= j and, when a length cap
is given, j - i < max_len. A span is assigned the label whose question
maximizes this probability.

The actual QA model is out of scope; ``reference_span_scorer`` is a
deterministic lexical stand-in so the whole pipeline runs untethered.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DistributionError
from .candidates import CandidateSpan
from .labels import ConceptLabel, QuestionSet
from .tokens import TaggedToken

_SUM_TOL = 1e-9

_QUESTION_STOPWORDS = {"what", "is", "the", "a", "an", "of", "are", "which"}


@dataclass(frozen=True)
class ScoreRow:
    """Per-token start/end score vectors for one question (softmax outputs)."""

    start_scores: np.ndarray
    end_scores: np.ndarray

    def __post_init__(self):
        start = np.asarray(self.start_scores, dtype=np.float64)
        end = np.asarray(self.end_scores, dtype=np.float64)
        object.__setattr__(self, "start_scores", start)
        object.__setattr__(self, "end_scores", end)
        if start.ndim != 1 or end.ndim != 1 or start.shape != end.shape:
            raise DistributionError("start/end score vectors must be 1-d and equally long")
        if start.size == 0:
            raise DistributionError("score vectors must cover at least one token")
        for name, vec in (("start", start), ("end", end)):
            if np.any(vec < 0):
                raise DistributionError(f"{name} scores contain negative entries")
            if abs(float(vec.sum()) - 1.0) > _SUM_TOL:
                raise DistributionError(
                    f"{name} scores sum to {float(vec.sum())!r}, expected 1 within {_SUM_TOL}"
                )

    @property
    def length(self) -> int:
        return int(self.start_scores.size)


class SpanScoreTable:
    """Question -> ScoreRow mapping over one document."""

    def __init__(self, rows: dict[str, ScoreRow]):
        if not rows:
            raise DistributionError("span score table needs at least one question row")
        lengths = {row.length for row in rows.values()}
        if len(lengths) != 1:
            raise DistributionError(f"score rows disagree on document length: {sorted(lengths)}")
        self._rows = dict(rows)
        self.length = lengths.pop()

    def __contains__(self, question: str) -> bool:
        return question in self._rows

    def __getitem__(self, question: str) -> ScoreRow:
        if question not in self._rows:
            raise KeyError(f"no scores for question: {question!r}")
        return self._rows[question]

    def questions(self) -> list[str]:
        return list(self._rows)


def _admissible_spans(length: int, max_len: int | None) -> list[tuple[int, int]]:
    cap = length if max_len is None else max_len
    return [(i, j) for i in range(length) for j in range(i, min(i + cap, length))]


def span_distribution(
    row: ScoreRow, max_len: int | None = None
) -> dict[tuple[int, int], float]:
    """Full probability distribution over admissible spans (sums to 1)."""
    spans = _admissible_spans(row.length, max_len)
    logits = np.array(
        [row.start_scores[i] * row.end_scores[j] for i, j in spans], dtype=np.float64
    )
    logits -= logits.max()
    weights = np.exp(logits)
    probs = weights / weights.sum()
    return {span: float(p) for span, p in zip(spans, probs)}


def span_probability(
    table: SpanScoreTable,
    question: str,
    span: CandidateSpan,
    max_len: int | None = None,
) -> float:
    """Probability that ``span`` answers ``question`` under the table."""
    row = table[question]
    if span.end >= row.length:
        raise ValueError(f"span [{span.start}, {span.end}] exceeds document length {row.length}")
    if max_len is not None and span.length > max_len:
        raise ValueError(f"span length {span.length} exceeds max_len {max_len}")
    return span_distribution(row, max_len)[(span.start, span.end)]


def assign_label(
    table: SpanScoreTable,
    questions: QuestionSet,
    span: CandidateSpan,
    max_len: int | None = None,
) -> tuple[ConceptLabel, float]:
    """Pick the label whose question gives the span its highest probability.

    Ties go to the earliest question in the set's deterministic order.
    """
    best_q: str | None = None
    best_p = -1.0
    for question in questions.questions():
        p = span_probability(table, question, span, max_len)
        if p > best_p:
            best_q, best_p = question, p
    assert best_q is not None
    return questions.label_of(best_q), best_p


def _char_trigrams(word: str) -> set[str]:
    word = word.lower()
    if len(word) < 3:
        return {word} if word else set()
    return {word[k : k + 3] for k in range(len(word) - 2)}


def _question_trigrams(question: str) -> set[str]:
    grams: set[str] = set()
    for word in question.lower().replace("?", " ").split():
        word = word.strip(".,;:")
        if word and word not in _QUESTION_STOPWORDS:
            grams |= _char_trigrams(word)
    return grams


def reference_span_scorer(tokens: list[TaggedToken], question: str) -> ScoreRow:
    """Deterministic lexical scorer: logit = trigram overlap with the question.

    Both start and end vectors are the softmax of those logits; an empty
    keyword set yields uniform scores.
    """
    if not tokens:
        raise ValueError("cannot score an empty document")
    q_grams = _question_trigrams(question)
    logits = np.array(
        [len(_char_trigrams(tok.text) & q_grams) for tok in tokens], dtype=np.float64
    )
    logits -= logits.max()
    weights = np.exp(logits)
    scores = weights / weights.sum()
    return ScoreRow(start_scores=scores, end_scores=scores.copy())


def score_document(
    tokens: list[TaggedToken],
    questions: QuestionSet,
    scorer=reference_span_scorer,
) -> SpanScoreTable:
    """Run the scorer once per question and collect the rows."""
    return SpanScoreTable({q: scorer(tokens, q) for q in questions.questions()})
