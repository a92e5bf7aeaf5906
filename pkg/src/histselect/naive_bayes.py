"""Gaussian naive Bayes, used for every cross-validation and test accuracy."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import Dataset

# Smoothing floor is tied to the scale of the fit data so singleton classes
# (zero variance) never produce infinite log-densities.
VAR_SMOOTHING_FACTOR = 1e-9


@dataclass(frozen=True)
class NaiveBayesModel:
    """Per-class Gaussian parameters over a feature subset.

    class_codes lists the classes present in the fit view in ascending
    code order (= class_names order), which is also the tie-break order
    for predictions.
    """

    class_codes: np.ndarray
    class_priors: np.ndarray
    class_means: np.ndarray
    class_variances: np.ndarray
    feature_subset: np.ndarray
    n_features_total: int


def fit(ds: Dataset, sample_indices, feature_subset) -> NaiveBayesModel:
    """Estimate priors, per-class means and smoothed population variances.

    Variances are floored at 1e-9 times the largest global (pooled) feature
    variance of the view, itself floored at 1.
    """
    idx = np.asarray(sample_indices, dtype=np.int64)
    feats = np.asarray(feature_subset, dtype=np.int64)
    if feats.size == 0:
        raise ValueError("empty feature subset")
    if idx.size == 0:
        raise ValueError("empty sample view")
    X = ds.values[np.ix_(idx, feats)]
    y = ds.labels[idx]
    codes = np.unique(y)
    if codes.size < 2:
        raise ValueError("single-class fit view")

    smoothing = VAR_SMOOTHING_FACTOR * max(1.0, float(X.var(axis=0).max()))
    priors = np.empty(codes.size)
    means = np.empty((codes.size, feats.size))
    variances = np.empty((codes.size, feats.size))
    for i, code in enumerate(codes):
        block = X[y == code]
        priors[i] = block.shape[0] / idx.size
        means[i] = block.mean(axis=0)
        variances[i] = np.maximum(block.var(axis=0), smoothing)
    return NaiveBayesModel(
        class_codes=codes,
        class_priors=priors,
        class_means=means,
        class_variances=variances,
        feature_subset=feats,
        n_features_total=ds.n_features,
    )


def joint_log_likelihood(model: NaiveBayesModel, samples: np.ndarray) -> np.ndarray:
    """Log prior plus summed Gaussian log-densities, shape (n, n_classes)."""
    samples = np.asarray(samples, dtype=np.float64)
    if samples.ndim == 1:
        samples = samples.reshape(1, -1)
    if samples.shape[1] != model.n_features_total:
        raise ValueError(
            f"dimension mismatch: sample has {samples.shape[1]} features, "
            f"model expects {model.n_features_total}"
        )
    x = samples[:, model.feature_subset]
    # (n, 1, f) against (c, f); all in log space to survive many features
    diff = x[:, None, :] - model.class_means[None, :, :]
    var = model.class_variances[None, :, :]
    log_density = -0.5 * (np.log(2.0 * np.pi * var) + diff * diff / var)
    return np.log(model.class_priors)[None, :] + log_density.sum(axis=2)


def predict_batch(model: NaiveBayesModel, samples: np.ndarray) -> np.ndarray:
    """Predicted class code per row; ties go to the first class in order."""
    jll = joint_log_likelihood(model, samples)
    return model.class_codes[np.argmax(jll, axis=1)]


def predict(model: NaiveBayesModel, sample: np.ndarray) -> int:
    """Predicted class code for a single full-length sample vector."""
    return int(predict_batch(model, np.asarray(sample).reshape(1, -1))[0])


def accuracy(model: NaiveBayesModel, ds: Dataset, sample_indices) -> float:
    """Fraction of correctly predicted samples in the view."""
    idx = np.asarray(sample_indices, dtype=np.int64)
    if idx.size == 0:
        raise ValueError("empty evaluation view")
    preds = predict_batch(model, ds.values[idx])
    return float(np.mean(preds == ds.labels[idx]))
