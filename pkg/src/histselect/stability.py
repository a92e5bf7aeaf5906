"""Core pipeline: area-normalized feature-occurrence histograms over
resampled training subsets, cumulative-area thresholding at peak
cross-validated accuracy, and per-feature CV ranking of the stable set."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .criteria import Criterion, rank_features, top_k
from .data import Dataset, subsample
from .evaluation import cv_accuracy, kfold
from .seeds import DOMAIN_FOLDS, DOMAIN_ROUND, derive_seed


@dataclass(frozen=True)
class HistogramConfig:
    """Knobs of the resampling pipeline.

    Defaults mirror the protocol the comparison experiments use: 100
    rounds of 20% stratified training subsets, top 100 features per round,
    10-fold CV, threshold sweep capped at 200 features.
    """

    criterion: Criterion
    rounds: int = 100
    subset_fraction: float = 0.2
    per_round_k: int = 100
    n_bins: int = 10
    cv_folds: int = 10
    curve_cap: int = 200
    master_seed: int = 0

    def __post_init__(self):
        if self.rounds < 1:
            raise ValueError("rounds must be >= 1")
        if not 0.0 < self.subset_fraction <= 1.0:
            raise ValueError("subset_fraction must be in (0, 1]")
        if self.per_round_k < 1:
            raise ValueError("per_round_k must be >= 1")
        if self.n_bins < 2:
            raise ValueError("n_bins must be >= 2")
        if self.cv_folds < 2:
            raise ValueError("cv_folds must be >= 2")
        if self.curve_cap < 1:
            raise ValueError("curve_cap must be >= 1")

    def validate_for(self, n_features: int) -> None:
        if self.per_round_k > n_features:
            raise ValueError(
                f"per_round_k={self.per_round_k} exceeds n_features={n_features}"
            )


@dataclass(frozen=True)
class FeatureHistogram:
    """Occurrence counts of features in per-round top-k lists.

    weights are counts normalized to unit total area; order sorts features
    by descending count with ties broken by ascending index.
    """

    counts: np.ndarray
    weights: np.ndarray
    order: np.ndarray

    @property
    def n_nonzero(self) -> int:
        return int(np.count_nonzero(self.counts))


@dataclass(frozen=True)
class SelectionResult:
    """Output of the full pipeline.

    stable_features is the within-threshold prefix reordered by individual
    CV accuracy; accuracy_curve holds (cumulative_area, cv_accuracy) per
    swept prefix length, step one feature.
    """

    threshold: float
    stable_features: np.ndarray
    per_feature_cv: np.ndarray
    accuracy_curve: list[tuple[float, float]]
    histogram: FeatureHistogram = field(repr=False)
    best_prefix_len: int = 0


def build_histogram(
    ds: Dataset, train, cfg: HistogramConfig, n_workers: int = 1
) -> FeatureHistogram:
    """Count per-round top-k occurrences over seeded resampling rounds.

    Round r subsamples the training indices with a seed derived from
    (master_seed, r), ranks all features on the subset and counts its top
    per_round_k features.  Counts are a pure function of (ds, train, cfg):
    rounds may run in any order and on any number of workers.
    """
    cfg.validate_for(ds.n_features)
    train = np.asarray(train, dtype=np.int64)
    if np.unique(ds.labels[train]).size < 2:
        raise ValueError("training indices cover a single class")

    def run_round(r: int) -> np.ndarray:
        seed_r = derive_seed(cfg.master_seed, DOMAIN_ROUND, r)
        subset = subsample(train, ds.labels, cfg.subset_fraction, seed_r)
        ranking = rank_features(ds, subset, cfg.criterion, cfg.n_bins)
        return top_k(ranking, cfg.per_round_k)

    if n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            round_tops = list(pool.map(run_round, range(cfg.rounds)))
    else:
        round_tops = [run_round(r) for r in range(cfg.rounds)]

    counts = np.zeros(ds.n_features, dtype=np.int64)
    for tops in round_tops:
        counts[tops] += 1
    weights = counts / counts.sum()
    order = np.argsort(-counts, kind="stable").astype(np.int64)
    return FeatureHistogram(counts=counts, weights=weights, order=order)


def cumulative_area(hist: FeatureHistogram, prefix_len: int) -> float:
    """Sum of normalized weights of the first prefix_len features in order."""
    if not 0 <= prefix_len <= len(hist.order):
        raise ValueError(
            f"prefix_len must be in [0, {len(hist.order)}], got {prefix_len}"
        )
    return float(hist.weights[hist.order[:prefix_len]].sum())


def _train_folds(ds: Dataset, train: np.ndarray, cfg: HistogramConfig) -> np.ndarray:
    return kfold(ds.labels[train], cfg.cv_folds, derive_seed(cfg.master_seed, DOMAIN_FOLDS))


def select_threshold(
    ds: Dataset,
    train,
    hist: FeatureHistogram,
    cfg: HistogramConfig,
    evaluator: Callable[[np.ndarray], float] | None = None,
) -> tuple[float, int, list[tuple[float, float]]]:
    """Find the cumulative-area threshold where CV accuracy peaks.

    Sweeps histogram-order prefixes one feature at a time over the
    nonzero-count features (capped at curve_cap), evaluating stratified
    cv_folds-fold naive Bayes accuracy on the training indices.  The
    best prefix (ties: smallest) defines the threshold.

    Returns:
        (threshold, best_prefix_len, accuracy_curve) where accuracy_curve
        lists (cumulative_area, cv_accuracy) for every swept prefix.
    """
    train = np.asarray(train, dtype=np.int64)
    n_nonzero = hist.n_nonzero
    if n_nonzero == 0:
        raise ValueError("histogram has no nonzero-count features")
    cap = min(n_nonzero, cfg.curve_cap)
    if evaluator is None:
        folds = _train_folds(ds, train, cfg)

        def evaluator(feats: np.ndarray) -> float:
            return cv_accuracy(ds, train, feats, folds)

    areas = np.cumsum(hist.weights[hist.order[:cap]])
    curve = []
    for p in range(1, cap + 1):
        acc = float(evaluator(hist.order[:p]))
        curve.append((float(areas[p - 1]), acc))
    accs = np.array([acc for _, acc in curve])
    best = int(np.argmax(accs))  # first maximum = smallest prefix on ties
    return curve[best][0], best + 1, curve


def rank_stable_features(
    ds: Dataset, train, stable_prefix, cfg: HistogramConfig
) -> tuple[np.ndarray, np.ndarray]:
    """Reorder the stable prefix by individual-feature CV accuracy.

    Each feature is evaluated on its own with cv_folds-fold naive Bayes
    accuracy over the training indices; ties keep histogram order.
    """
    train = np.asarray(train, dtype=np.int64)
    prefix = np.asarray(stable_prefix, dtype=np.int64)
    if prefix.size == 0:
        raise ValueError("stable prefix is empty")
    folds = _train_folds(ds, train, cfg)
    accs = np.array(
        [cv_accuracy(ds, train, prefix[i : i + 1], folds) for i in range(prefix.size)]
    )
    order = np.argsort(-accs, kind="stable")
    return prefix[order], accs[order]


def select(
    ds: Dataset, train, cfg: HistogramConfig, n_workers: int = 1
) -> SelectionResult:
    """Run the full pipeline: histogram, threshold, per-feature ranking.

    Deterministic given (ds, train, cfg); n_workers changes wall time only.
    """
    hist = build_histogram(ds, train, cfg, n_workers=n_workers)
    threshold, best_len, curve = select_threshold(ds, train, hist, cfg)
    ranked, per_feature_cv = rank_stable_features(
        ds, train, hist.order[:best_len], cfg
    )
    return SelectionResult(
        threshold=threshold,
        stable_features=ranked,
        per_feature_cv=per_feature_cv,
        accuracy_curve=curve,
        histogram=hist,
        best_prefix_len=best_len,
    )
