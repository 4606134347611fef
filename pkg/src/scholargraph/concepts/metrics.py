"""Token-level evaluation: per-label F1 and cross-entropy.

F1 is computed at the token level: a token counts as a true positive for
role x when both sequences tag it with x, ignoring the B/I prefix. This
rewards partial span matches, which entity-level F1 would score as misses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import DistributionError
from .bio import OUTSIDE, _split
from .labels import ConceptLabel

_SUM_TOL = 1e-9


@dataclass(frozen=True)
class LabelScore:
    true_positive: int
    false_positive: int
    false_negative: int

    @property
    def support(self) -> int:
        return self.true_positive + self.false_positive + self.false_negative

    @property
    def precision(self) -> float:
        denom = self.true_positive + self.false_positive
        return self.true_positive / denom if denom else 0.0

    @property
    def recall(self) -> float:
        denom = self.true_positive + self.false_negative
        return self.true_positive / denom if denom else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0


@dataclass(frozen=True)
class TokenF1Report:
    """Per-label scores plus macro averages.

    Macro averages run over labels that occur in either sequence; labels
    absent from both carry no signal and are left out of the mean.
    """

    per_label: dict[ConceptLabel, LabelScore]

    def _macro(self, attr: str) -> float:
        supported = [s for s in self.per_label.values() if s.support > 0]
        if not supported:
            return 0.0
        return sum(getattr(s, attr) for s in supported) / len(supported)

    @property
    def macro_precision(self) -> float:
        return self._macro("precision")

    @property
    def macro_recall(self) -> float:
        return self._macro("recall")

    @property
    def macro_f1(self) -> float:
        return self._macro("f1")


def _token_class(label: str) -> ConceptLabel | None:
    prefix, role = _split(label)
    return None if prefix == OUTSIDE else role


def token_f1(predicted: Sequence[str], gold: Sequence[str]) -> TokenF1Report:
    """Token-level precision/recall/F1 per role, B/I prefixes ignored."""
    if len(predicted) != len(gold):
        raise ValueError(f"length mismatch: {len(predicted)} predicted vs {len(gold)} gold")
    counts = {label: [0, 0, 0] for label in ConceptLabel}  # tp, fp, fn
    for p_raw, g_raw in zip(predicted, gold):
        p_cls, g_cls = _token_class(p_raw), _token_class(g_raw)
        if p_cls is g_cls:
            if p_cls is not None:
                counts[p_cls][0] += 1
        else:
            if p_cls is not None:
                counts[p_cls][1] += 1
            if g_cls is not None:
                counts[g_cls][2] += 1
    return TokenF1Report(
        per_label={
            label: LabelScore(true_positive=tp, false_positive=fp, false_negative=fn)
            for label, (tp, fp, fn) in counts.items()
        }
    )


def cross_entropy(true_dist: np.ndarray, pred_dist: np.ndarray) -> float:
    """Mean over tokens of -sum_l P(t,l) * ln Q(t,l).

    Rows are per-token label distributions and must each sum to 1 within
    1e-9. Q must be strictly positive wherever P is positive; a zero there
    is an error rather than a silent clamp.
    """
    p = np.asarray(true_dist, dtype=np.float64)
    q = np.asarray(pred_dist, dtype=np.float64)
    if p.shape != q.shape or p.ndim != 2:
        raise DistributionError(f"distribution shapes differ or are not 2-d: {p.shape} vs {q.shape}")
    if p.shape[0] == 0:
        raise DistributionError("no tokens to average over")
    for name, dist in (("true", p), ("pred", q)):
        if np.any(dist < 0):
            raise DistributionError(f"{name} distribution has negative entries")
        bad = np.abs(dist.sum(axis=1) - 1.0) > _SUM_TOL
        if np.any(bad):
            raise DistributionError(
                f"{name} distribution rows {np.flatnonzero(bad).tolist()} do not sum to 1"
            )
    support = p > 0
    if np.any(q[support] == 0):
        rows = np.flatnonzero(np.any(support & (q == 0), axis=1)).tolist()
        raise DistributionError(f"pred assigns zero mass where true is positive at tokens {rows}")
    total = 0.0
    for t in range(p.shape[0]):
        row_p, row_q = p[t], q[t]
        mask = row_p > 0
        total += -float(np.sum(row_p[mask] * np.log(row_q[mask])))
    return total / p.shape[0]
