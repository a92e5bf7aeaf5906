"""Pure numpy implementations of the per-feature scoring kernels.

Fallback used when the compiled extension is unavailable (or forced via
HISTSELECT_BACKEND=python).  Function signatures and semantics match
histselect._kernels exactly.
"""

from __future__ import annotations

import numpy as np

FISHER_EPS = 1e-12


def discretize_matrix(values: np.ndarray, n_bins: int) -> tuple[np.ndarray, np.ndarray]:
    """Equal-width-bin every column of a (n_samples, n_features) matrix.

    Returns (codes, bins_per_feature); constant columns collapse to a
    single bin.  The top bin is right-closed so the column maximum maps to
    bin n_bins - 1.
    """
    values = np.ascontiguousarray(values, dtype=np.float64)
    n_samples, n_features = values.shape
    lo = values.min(axis=0)
    hi = values.max(axis=0)
    span = hi - lo
    constant = span == 0.0
    width = np.where(constant, 1.0, span / n_bins)
    codes = np.floor((values - lo) / width).astype(np.int32)
    np.clip(codes, 0, n_bins - 1, out=codes)
    codes[:, constant] = 0
    bins = np.where(constant, 1, n_bins).astype(np.int32)
    return codes, bins


def fisher_scores(values: np.ndarray, labels: np.ndarray, n_classes: int) -> np.ndarray:
    """Fisher ratio per column: between-class over within-class scatter.

    Population (divide-by-n_c) variances; the denominator is floored at
    FISHER_EPS so perfectly separating columns score finitely high.
    """
    values = np.ascontiguousarray(values, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.int64)
    n_samples, n_features = values.shape
    overall = values.mean(axis=0)
    between = np.zeros(n_features)
    within = np.zeros(n_features)
    for code in range(n_classes):
        mask = labels == code
        n_c = int(mask.sum())
        if n_c == 0:
            continue
        block = values[mask]
        mu_c = block.mean(axis=0)
        between += n_c * (mu_c - overall) ** 2
        within += ((block - mu_c) ** 2).sum(axis=0)
    return between / np.maximum(within, FISHER_EPS)


def _contingency(
    codes: np.ndarray, labels: np.ndarray, n_classes: int, n_bins: int
) -> np.ndarray:
    """(n_features, n_bins, n_classes) occurrence tables via one bincount."""
    n_samples, n_features = codes.shape
    flat = (
        np.arange(n_features, dtype=np.int64)[None, :] * (n_bins * n_classes)
        + codes.astype(np.int64) * n_classes
        + labels[:, None]
    )
    tables = np.bincount(flat.ravel(), minlength=n_features * n_bins * n_classes)
    return tables.reshape(n_features, n_bins, n_classes).astype(np.float64)


def chi2_scores(
    codes: np.ndarray, labels: np.ndarray, n_classes: int, n_bins: int
) -> np.ndarray:
    """Pearson chi-square of each bin-by-class table against independence.

    Cells with zero expected count contribute nothing.
    """
    codes = np.ascontiguousarray(codes, dtype=np.int32)
    labels = np.asarray(labels, dtype=np.int64)
    n_samples = codes.shape[0]
    observed = _contingency(codes, labels, n_classes, n_bins)
    rows = observed.sum(axis=2)  # (f, b)
    cols = np.bincount(labels, minlength=n_classes).astype(np.float64)  # (c,)
    expected = rows[:, :, None] * cols[None, None, :] / n_samples
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(expected > 0, (observed - expected) ** 2 / expected, 0.0)
    return terms.sum(axis=(1, 2))


def infogain_scores(
    codes: np.ndarray, labels: np.ndarray, n_classes: int, n_bins: int
) -> np.ndarray:
    """Information gain H(Y) - H(Y|X) in bits from the bin-by-class table."""
    codes = np.ascontiguousarray(codes, dtype=np.int32)
    labels = np.asarray(labels, dtype=np.int64)
    n_samples = codes.shape[0]
    observed = _contingency(codes, labels, n_classes, n_bins)
    rows = observed.sum(axis=2)  # (f, b)
    cols = np.bincount(labels, minlength=n_classes).astype(np.float64)

    p_y = cols / n_samples
    h_y = -np.sum(p_y[p_y > 0] * np.log2(p_y[p_y > 0]))

    with np.errstate(divide="ignore", invalid="ignore"):
        # sum_{b,c} (O/N) * log2(O / row_b), zero where O == 0
        cond = np.where(
            observed > 0,
            observed / n_samples * np.log2(observed / rows[:, :, None]),
            0.0,
        )
    h_y_given_x = -cond.sum(axis=(1, 2))
    return np.maximum(h_y - h_y_given_x, 0.0)
