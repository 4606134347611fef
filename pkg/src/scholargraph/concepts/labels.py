"""Concept label taxonomy and the question set used for weak labeling.

Every extracted concept plays one of five semantic roles in an abstract.
Weak labeling turns each role into one or more natural-language questions;
a span is assigned the role whose question it answers best.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class ConceptLabel(enum.Enum):
    """The five semantic roles a concept can play in an abstract."""

    APPLICATION = "application"
    DATA = "data"
    METHOD = "method"
    VISUALIZATION = "visualization"
    EVALUATION = "evaluation"

    @classmethod
    def from_value(cls, value: str) -> "ConceptLabel":
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown concept label: {value!r}") from None


@dataclass(frozen=True)
class QuestionSet:
    """Maps each concept label to the questions that probe for it.

    Every label must carry at least one question.
    """

    entries: dict[ConceptLabel, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        for label in ConceptLabel:
            if not self.entries.get(label):
                raise ValueError(f"question set has no questions for {label.value}")

    def questions(self) -> list[str]:
        """All questions, in label order then listed order (deterministic)."""
        out: list[str] = []
        for label in ConceptLabel:
            out.extend(self.entries[label])
        return out

    def label_of(self, question: str) -> ConceptLabel:
        for label, qs in self.entries.items():
            if question in qs:
                return label
        raise KeyError(f"question not in set: {question!r}")


def default_question_set() -> QuestionSet:
    """The stock question set covering all five roles."""
    return QuestionSet(
        {
            ConceptLabel.DATA: ("what is the data?", "what is the dataset?"),
            ConceptLabel.APPLICATION: ("what is the application?", "what is the task?"),
            ConceptLabel.METHOD: (
                "what is the method?",
                "what is the algorithm?",
                "what is the technique?",
            ),
            ConceptLabel.VISUALIZATION: ("what is the visualization?", "what is the chart?"),
            ConceptLabel.EVALUATION: ("what is the evaluation?",),
        }
    )
