"""Cross-validation, the single-shot baseline, stability metrics and the
presented-vs-conventional comparison experiment."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import naive_bayes as nb
from .criteria import Criterion, rank_features, top_k
from .data import Dataset, split_equal
from .seeds import DOMAIN_PIPELINE, DOMAIN_SPLIT, derive_seed, rng_from


def kfold(labels, k: int, seed: int) -> np.ndarray:
    """Seeded stratified fold assignment, one fold index per sample.

    Per class the fold sizes differ by at most one.  Raises if any fold's
    training complement would be single-class.
    """
    labels = np.asarray(labels, dtype=np.int64)
    n = labels.size
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if k > n:
        raise ValueError(f"k={k} exceeds the {n} available samples")
    rng = rng_from(seed)
    folds = np.empty(n, dtype=np.int32)
    dealt = 0
    for code in np.unique(labels):
        members = np.flatnonzero(labels == code)
        perm = rng.permutation(members)
        # rotate the starting fold so overall fold sizes stay balanced
        folds[perm] = (dealt + np.arange(perm.size)) % k
        dealt += perm.size
    for fold in range(k):
        if np.unique(labels[folds != fold]).size < 2:
            raise ValueError(
                f"fold {fold} leaves a single-class training complement"
            )
    return folds


def cv_accuracy(ds: Dataset, train, feature_subset, folds: np.ndarray) -> float:
    """Mean over folds of naive Bayes accuracy, fit out-of-fold, scored in-fold."""
    train = np.asarray(train, dtype=np.int64)
    feats = np.asarray(feature_subset, dtype=np.int64)
    if feats.size == 0:
        raise ValueError("empty feature subset")
    k = int(folds.max()) + 1
    accs = []
    for fold in range(k):
        held_out = folds == fold
        model = nb.fit(ds, train[~held_out], feats)
        accs.append(nb.accuracy(model, ds, train[held_out]))
    return float(np.mean(accs))


def conventional_select(
    ds: Dataset, train, criterion: Criterion, n: int, n_bins: int = 10
) -> np.ndarray:
    """Single-shot baseline: rank on the full training set, take the top n."""
    ranking = rank_features(ds, train, criterion, n_bins)
    return top_k(ranking, n)


def jaccard_stability(sets: Sequence) -> float:
    """Mean pairwise |A & B| / |A | B| over a collection of feature sets."""
    if len(sets) < 2:
        raise ValueError("need at least 2 sets")
    frozen = [frozenset(int(x) for x in s) for s in sets]
    if any(len(s) == 0 for s in frozen):
        raise ValueError("sets must be non-empty")
    total = 0.0
    pairs = 0
    for i in range(len(frozen)):
        for j in range(i + 1, len(frozen)):
            total += len(frozen[i] & frozen[j]) / len(frozen[i] | frozen[j])
            pairs += 1
    return total / pairs


@dataclass(frozen=True)
class MethodResult:
    """Test accuracies of one method over the repetition loop."""

    accuracies: tuple[float, ...]
    n_features_used: int
    mean: float
    std: float

    @classmethod
    def from_accuracies(cls, accuracies, n_features_used: int) -> "MethodResult":
        accs = tuple(float(a) for a in accuracies)
        mean = sum(accs) / len(accs)
        if len(accs) > 1:
            std = math.sqrt(sum((a - mean) ** 2 for a in accs) / (len(accs) - 1))
        else:
            std = 0.0
        return cls(accs, int(n_features_used), mean, std)


@dataclass(frozen=True)
class CriterionComparison:
    """Presented vs conventional results for one criterion, plus the swept
    mean test-accuracy curve over histogram-order prefixes."""

    criterion: Criterion
    presented: MethodResult
    conventional: MethodResult
    test_curve: tuple[tuple[int, float], ...]


@dataclass(frozen=True)
class ExperimentReport:
    """Per-criterion comparison entries for one dataset."""

    dataset_name: str
    entries: tuple[CriterionComparison, ...]

    def average_mean(self, method: str) -> float:
        return sum(self._result(e, method).mean for e in self.entries) / len(
            self.entries
        )

    def average_std(self, method: str) -> float:
        return sum(self._result(e, method).std for e in self.entries) / len(
            self.entries
        )

    def average_n_features(self, method: str) -> int:
        total = sum(self._result(e, method).n_features_used for e in self.entries)
        return round(total / len(self.entries))

    @staticmethod
    def _result(entry: CriterionComparison, method: str) -> MethodResult:
        if method == "presented":
            return entry.presented
        if method == "conventional":
            return entry.conventional
        raise ValueError(f"unknown method {method!r}")


def run_comparison(
    ds: Dataset,
    criteria: Sequence[Criterion],
    repetitions: int,
    cfg_template,
    seed: int,
    dataset_name: str = "dataset",
    n_workers: int = 1,
    sweep_test_curve: bool = True,
) -> ExperimentReport:
    """Compare stable selection against the single-shot baseline.

    Each repetition draws a fresh stratified 50/50 split, runs the full
    histogram pipeline on the training half and measures test accuracy at
    its selected prefix; the conventional baseline then gets the same
    feature budget from a single ranking of the full training half.  With
    sweep_test_curve the test accuracy of every histogram-order prefix (up
    to curve_cap) is also recorded and averaged over repetitions.

    Args:
        cfg_template: a stability.HistogramConfig whose criterion and
            master_seed fields are overridden per (criterion, repetition).
    """
    from .stability import select  # local import, stability builds on this module

    if repetitions < 2:
        raise ValueError("repetitions must be >= 2")
    criteria = list(criteria)
    if not criteria:
        raise ValueError("need at least one criterion")

    presented_accs: dict[Criterion, list[float]] = {c: [] for c in criteria}
    conventional_accs: dict[Criterion, list[float]] = {c: [] for c in criteria}
    budgets: dict[Criterion, list[int]] = {c: [] for c in criteria}
    curves: dict[Criterion, list[list[float]]] = {c: [] for c in criteria}

    for rep in range(repetitions):
        split = split_equal(ds, derive_seed(seed, DOMAIN_SPLIT, rep))
        pipe_seed = derive_seed(seed, DOMAIN_PIPELINE, rep)
        for crit in criteria:
            cfg = dataclasses.replace(
                cfg_template, criterion=crit, master_seed=pipe_seed
            )
            result = select(ds, split.train, cfg, n_workers=n_workers)
            model = nb.fit(ds, split.train, result.stable_features)
            presented_accs[crit].append(nb.accuracy(model, ds, split.test))
            budget = len(result.stable_features)
            budgets[crit].append(budget)

            conv_feats = conventional_select(ds, split.train, crit, budget, cfg.n_bins)
            conv_model = nb.fit(ds, split.train, conv_feats)
            conventional_accs[crit].append(nb.accuracy(conv_model, ds, split.test))

            if sweep_test_curve:
                hist = result.histogram
                cap = min(int(np.count_nonzero(hist.counts)), cfg.curve_cap)
                curve = []
                for p in range(1, cap + 1):
                    prefix_model = nb.fit(ds, split.train, hist.order[:p])
                    curve.append(nb.accuracy(prefix_model, ds, split.test))
                curves[crit].append(curve)

    entries = []
    for crit in criteria:
        budget = round(sum(budgets[crit]) / len(budgets[crit]))
        test_curve: tuple[tuple[int, float], ...] = ()
        if sweep_test_curve and curves[crit]:
            depth = min(len(c) for c in curves[crit])
            test_curve = tuple(
                (p + 1, float(np.mean([c[p] for c in curves[crit]])))
                for p in range(depth)
            )
        entries.append(
            CriterionComparison(
                criterion=crit,
                presented=MethodResult.from_accuracies(presented_accs[crit], budget),
                conventional=MethodResult.from_accuracies(
                    conventional_accs[crit], budget
                ),
                test_curve=test_curve,
            )
        )
    return ExperimentReport(dataset_name=dataset_name, entries=tuple(entries))
