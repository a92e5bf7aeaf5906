"""Filter criteria (chi-square, Fisher score, information gain) and ranking."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import backend
from .data import Dataset, DiscretizedColumn


class Criterion(enum.Enum):
    """Closed set of supported filter criteria."""

    CHI_SQUARE = "chisquare"
    FISHER = "fisher"
    INFO_GAIN = "infogain"

    @classmethod
    def from_name(cls, name: str) -> "Criterion":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(c.value for c in cls)
            raise ValueError(
                f"unknown criterion {name!r} (expected one of: {valid})"
            ) from None


@dataclass(frozen=True)
class FeatureRanking:
    """All features of one criterion run, sorted by descending score.

    Ties are broken by ascending feature index, so rankings are
    reproducible across runs and parallel schedules.
    """

    feature_indices: np.ndarray
    scores: np.ndarray
    criterion: Criterion

    def __len__(self) -> int:
        return len(self.feature_indices)


def _as_labels(labels) -> np.ndarray:
    labels = np.asarray(labels, dtype=np.int64)
    if np.unique(labels).size < 2:
        raise ValueError("need at least 2 classes, got a single-class input")
    return labels


def fisher_score(column, labels) -> float:
    """Fisher ratio of one column: between-class over within-class scatter.

    Uses population (divide-by-n_c) class variances; the within-class
    denominator is floored at a small epsilon so a perfectly separating
    column gets a large finite score instead of dividing by zero.
    """
    labels = _as_labels(labels)
    column = np.asarray(column, dtype=np.float64).reshape(-1, 1)
    scores = backend.fisher_scores(column, labels, int(labels.max()) + 1)
    return float(scores[0])


def chi_square_score(column: DiscretizedColumn, labels) -> float:
    """Pearson chi-square statistic of the bin-by-class contingency table."""
    labels = _as_labels(labels)
    codes = column.bins.reshape(-1, 1)
    scores = backend.chi2_scores(
        codes, labels, int(labels.max()) + 1, column.n_bins
    )
    return float(scores[0])


def info_gain_score(column: DiscretizedColumn, labels) -> float:
    """Information gain H(Y) - H(Y|X) in bits, plug-in estimates, 0*log0 = 0."""
    labels = _as_labels(labels)
    codes = column.bins.reshape(-1, 1)
    scores = backend.infogain_scores(
        codes, labels, int(labels.max()) + 1, column.n_bins
    )
    return float(scores[0])


def rank_features(
    ds: Dataset, sample_indices, criterion: Criterion, n_bins: int = 10
) -> FeatureRanking:
    """Score every feature on a sample view and sort by descending score.

    ChiSquare and InfoGain discretize each column (equal-width, n_bins)
    before scoring; Fisher works on the raw values.
    """
    idx = np.asarray(sample_indices, dtype=np.int64)
    view = ds.values[idx]
    labels = ds.labels[idx]
    if np.unique(labels).size < 2:
        raise ValueError("sample view covers a single class")
    if criterion is Criterion.FISHER:
        scores = backend.fisher_scores(view, labels, ds.n_classes)
    else:
        codes, _ = backend.discretize_matrix(view, n_bins)
        if criterion is Criterion.CHI_SQUARE:
            scores = backend.chi2_scores(codes, labels, ds.n_classes, n_bins)
        else:
            scores = backend.infogain_scores(codes, labels, ds.n_classes, n_bins)
    order = np.argsort(-scores, kind="stable")
    return FeatureRanking(
        feature_indices=order.astype(np.int64),
        scores=scores[order],
        criterion=criterion,
    )


def top_k(ranking: FeatureRanking, k: int) -> np.ndarray:
    """First k feature indices of the ranking."""
    if not 0 <= k <= len(ranking):
        raise ValueError(f"k must be in [0, {len(ranking)}], got {k}")
    return ranking.feature_indices[:k].copy()
