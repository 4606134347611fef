"""Token-level F1 and distribution cross-entropy."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scholargraph.concepts.bio import bio_label_universe
from scholargraph.concepts.labels import ConceptLabel
from scholargraph.concepts.metrics import cross_entropy, token_f1
from scholargraph.errors import DistributionError

N_CLASSES = len(bio_label_universe())


class TestTokenF1:
    def test_identical_sequences_score_one(self):
        seq = ["O", "B_method", "I_method", "O", "B_data", "I_data", "O"]
        report = token_f1(seq, seq)
        assert report.macro_f1 == 1.0
        assert report.macro_precision == 1.0
        assert report.macro_recall == 1.0

    def test_fully_disjoint_sequences_score_zero(self):
        gold = ["B_method", "I_method", "B_data"]
        pred = ["B_data", "I_evaluation", "O"]
        assert token_f1(pred, gold).macro_f1 == 0.0

    def test_prefix_is_ignored(self):
        gold = ["B_data", "I_data"]
        pred = ["I_data", "B_data"]
        report = token_f1(pred, gold)
        assert report.per_label[ConceptLabel.DATA].f1 == 1.0

    def test_counts(self):
        gold = ["B_data", "I_data", "O", "B_method"]
        pred = ["B_data", "O", "B_data", "O"]
        score = token_f1(pred, gold).per_label[ConceptLabel.DATA]
        assert (score.true_positive, score.false_positive, score.false_negative) == (1, 1, 1)
        assert score.precision == 0.5
        assert score.recall == 0.5
        assert score.f1 == 0.5
        method = token_f1(pred, gold).per_label[ConceptLabel.METHOD]
        assert (method.true_positive, method.false_positive, method.false_negative) == (0, 0, 1)
        assert method.f1 == 0.0

    def test_macro_averages_supported_labels_only(self):
        gold = ["B_data", "O", "B_method"]
        pred = ["B_data", "O", "O"]
        report = token_f1(pred, gold)
        # data perfect (f1 1.0), method missed (f1 0.0), other three roles
        # unsupported and excluded: macro = (1.0 + 0.0) / 2
        assert report.macro_f1 == pytest.approx(0.5)

    def test_all_outside_gives_zero_macro(self):
        assert token_f1(["O", "O"], ["O", "O"]).macro_f1 == 0.0

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            token_f1(["O"], ["O", "O"])


def one_hot(rows: list[int]) -> np.ndarray:
    out = np.zeros((len(rows), N_CLASSES))
    for t, cls in enumerate(rows):
        out[t, cls] = 1.0
    return out


class TestCrossEntropy:
    def test_one_hot_self_entropy_is_zero(self):
        p = one_hot([0, 3, 7, 10])
        assert cross_entropy(p, p) == 0.0

    def test_one_hot_against_uniform_is_log_class_count(self):
        p = one_hot([2, 5, 0])
        q = np.full((3, N_CLASSES), 1.0 / N_CLASSES)
        assert cross_entropy(p, q) == pytest.approx(math.log(11), abs=1e-9)

    def test_mean_over_tokens(self):
        p = one_hot([0, 1])
        q = p.copy()
        q[1] = np.full(N_CLASSES, 1.0 / N_CLASSES)
        # token 0 contributes 0, token 1 contributes ln 11
        assert cross_entropy(p, q) == pytest.approx(math.log(11) / 2, abs=1e-9)

    @given(st.integers(0, 2**32 - 1), st.integers(1, 8))
    @settings(max_examples=60, deadline=None)
    def test_gibbs_inequality(self, seed, n_tokens):
        rng = np.random.default_rng(seed)
        p = rng.dirichlet(np.ones(N_CLASSES), size=n_tokens)
        q = rng.dirichlet(np.ones(N_CLASSES), size=n_tokens)
        assert cross_entropy(p, q) >= cross_entropy(p, p) - 1e-12

    def test_zero_pred_mass_off_support_is_fine(self):
        p = one_hot([4])
        assert cross_entropy(p, one_hot([4])) == 0.0

    def test_zero_pred_mass_on_support_rejected(self):
        p = one_hot([4])
        q = one_hot([5])
        with pytest.raises(DistributionError):
            cross_entropy(p, q)

    def test_shape_mismatch_rejected(self):
        with pytest.raises(DistributionError):
            cross_entropy(one_hot([0]), np.full((2, N_CLASSES), 1.0 / N_CLASSES))
        with pytest.raises(DistributionError):
            cross_entropy(np.ones(N_CLASSES) / N_CLASSES, np.ones(N_CLASSES) / N_CLASSES)

    def test_unnormalized_rows_rejected(self):
        bad = one_hot([0])
        bad[0, 0] = 0.5
        with pytest.raises(DistributionError):
            cross_entropy(bad, one_hot([0]))
        with pytest.raises(DistributionError):
            cross_entropy(one_hot([0]), bad)

    def test_negative_entries_rejected(self):
        bad = one_hot([0])
        bad[0, 1] = -0.1
        bad[0, 2] = 0.1
        with pytest.raises(DistributionError):
            cross_entropy(bad, one_hot([0]))

    def test_empty_rejected(self):
        empty = np.zeros((0, N_CLASSES))
        with pytest.raises(DistributionError):
            cross_entropy(empty, empty)
