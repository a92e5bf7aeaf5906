"""Dataset container, CSV ingestion, splitting, subsampling and binning."""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .seeds import rng_from


@dataclass(frozen=True)
class Dataset:
    """Dense numeric sample-by-feature matrix with categorical labels.

    Attributes:
        values: float64 array of shape (n_samples, n_features), all finite.
        labels: int64 array of per-sample class codes indexing class_names.
        feature_names: unique name per feature column.
        class_names: distinct class labels in first-appearance order.
    """

    values: np.ndarray
    labels: np.ndarray
    feature_names: list[str]
    class_names: list[str]

    def __post_init__(self):
        values = np.ascontiguousarray(self.values, dtype=np.float64)
        labels = np.asarray(self.labels, dtype=np.int64)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "labels", labels)
        if values.ndim != 2:
            raise ValueError("values must be a 2-d matrix")
        n_samples, n_features = values.shape
        if not np.all(np.isfinite(values)):
            raise ValueError("values must be finite (no NaN/inf)")
        if labels.shape != (n_samples,):
            raise ValueError("labels length must equal n_samples")
        if len(self.feature_names) != n_features:
            raise ValueError("feature_names length must equal n_features")
        if len(set(self.feature_names)) != n_features:
            raise ValueError("feature names must be unique")
        if len(self.class_names) < 2:
            raise ValueError("fewer than 2 classes")
        if n_samples < 2:
            raise ValueError("need at least 2 samples")
        if labels.min(initial=0) < 0 or labels.max(initial=0) >= len(self.class_names):
            raise ValueError("label codes out of range")
        counts = np.bincount(labels, minlength=len(self.class_names))
        if np.any(counts == 0):
            missing = self.class_names[int(np.argmin(counts))]
            raise ValueError(f"class {missing!r} has no samples")
        # Shared freely across threads; freeze the buffers.
        values.flags.writeable = False
        labels.flags.writeable = False

    @property
    def n_samples(self) -> int:
        return self.values.shape[0]

    @property
    def n_features(self) -> int:
        return self.values.shape[1]

    @property
    def n_classes(self) -> int:
        return len(self.class_names)

    def class_counts(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.n_classes)


@dataclass(frozen=True)
class SplitIndices:
    """Disjoint train/test sample indices covering a dataset exactly once."""

    train: np.ndarray
    test: np.ndarray


@dataclass(frozen=True)
class DiscretizedColumn:
    """Equal-width binning of one feature column.

    bins holds a per-sample bin index in [0, n_bins); edges are the
    n_bins - 1 ascending cut points.  A constant column degenerates to a
    single bin with no edges.
    """

    bins: np.ndarray
    n_bins: int
    edges: np.ndarray = field(default_factory=lambda: np.empty(0))


def load_csv(path: str | os.PathLike, label_column: str) -> Dataset:
    """Load a dense numeric dataset from a headered CSV file.

    Every column except `label_column` must parse as a finite real number.
    Class names are recorded in order of first appearance; row order is
    preserved.

    Raises:
        FileNotFoundError: missing file.
        ValueError: missing header or label column, non-numeric or
            non-finite cell (reported with row and column), duplicate
            feature names, or fewer than 2 classes.
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(f"no such file: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: missing header row") from None
        header = [h.strip() for h in header]
        if label_column not in header:
            raise ValueError(
                f"{path}: label column {label_column!r} not in header {header}"
            )
        label_pos = header.index(label_column)
        feature_names = [h for i, h in enumerate(header) if i != label_pos]
        if len(set(feature_names)) != len(feature_names):
            dupes = sorted({n for n in feature_names if feature_names.count(n) > 1})
            raise ValueError(f"{path}: duplicate feature names {dupes}")

        rows: list[list[float]] = []
        raw_labels: list[str] = []
        for row_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ValueError(
                    f"{path}: row {row_no} has {len(row)} cells, expected {len(header)}"
                )
            raw_labels.append(row[label_pos].strip())
            parsed = []
            for pos, cell in enumerate(row):
                if pos == label_pos:
                    continue
                name = header[pos]
                try:
                    value = float(cell)
                except ValueError:
                    raise ValueError(
                        f"{path}: row {row_no}, column {name!r}: "
                        f"cannot parse {cell!r} as a number"
                    ) from None
                if not math.isfinite(value):
                    raise ValueError(
                        f"{path}: row {row_no}, column {name!r}: "
                        f"non-finite value {cell!r}"
                    )
                parsed.append(value)
            rows.append(parsed)

    class_names: list[str] = []
    codes = []
    for lab in raw_labels:
        if lab not in class_names:
            class_names.append(lab)
        codes.append(class_names.index(lab))
    if len(class_names) < 2:
        raise ValueError(f"{path}: fewer than 2 classes")

    values = np.asarray(rows, dtype=np.float64).reshape(len(rows), len(feature_names))
    return Dataset(values, np.asarray(codes), feature_names, class_names)


def split_equal(ds: Dataset, rng_seed: int) -> SplitIndices:
    """Stratified 50/50 train/test split.

    Per class, floor(n_c / 2) samples go to train and the remainder
    (including any odd leftover) to test.  Assignment is a
    seed-deterministic permutation within each class.
    """
    rng = rng_from(rng_seed)
    train_parts = []
    test_parts = []
    for code, name in enumerate(ds.class_names):
        members = np.flatnonzero(ds.labels == code)
        if members.size < 2:
            raise ValueError(f"class {name!r} has fewer than 2 samples")
        perm = rng.permutation(members)
        n_train = members.size // 2
        train_parts.append(perm[:n_train])
        test_parts.append(perm[n_train:])
    train = np.sort(np.concatenate(train_parts))
    test = np.sort(np.concatenate(test_parts))
    return SplitIndices(train, test)


def subsample(
    train: np.ndarray, labels: np.ndarray, fraction: float, rng_seed: int
) -> np.ndarray:
    """Stratified sample without replacement from a list of train indices.

    Per class present in `train`, max(1, round(fraction * n_c)) indices are
    drawn (round half up), so every class stays represented.  `labels` is
    the full per-sample label array that `train` indexes into.
    """
    train = np.asarray(train, dtype=np.int64)
    if train.size == 0:
        raise ValueError("train index list is empty")
    if not 0.0 < fraction <= 1.0:
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    sub_labels = labels[train]
    present = np.unique(sub_labels)
    if present.size < 2:
        raise ValueError("train indices cover a single class")
    rng = rng_from(rng_seed)
    picks = []
    for code in present:
        members = train[sub_labels == code]
        take = max(1, int(math.floor(fraction * members.size + 0.5)))
        perm = rng.permutation(members)
        picks.append(perm[:take])
    return np.sort(np.concatenate(picks))


def discretize_column(column: np.ndarray, n_bins: int) -> DiscretizedColumn:
    """Equal-width binning of a finite real column.

    Bin edges split [min, max] into n_bins equal intervals; the maximum
    value falls in the top bin (the last interval is right-closed).  A
    constant column maps everything to bin 0 with n_bins forced to 1.
    """
    column = np.asarray(column, dtype=np.float64)
    if n_bins < 2:
        raise ValueError(f"n_bins must be >= 2, got {n_bins}")
    if not np.all(np.isfinite(column)):
        raise ValueError("column must be finite")
    lo = column.min()
    hi = column.max()
    if hi == lo:
        return DiscretizedColumn(
            bins=np.zeros(column.shape, dtype=np.int32), n_bins=1
        )
    width = (hi - lo) / n_bins
    bins = np.floor((column - lo) / width).astype(np.int32)
    np.clip(bins, 0, n_bins - 1, out=bins)
    edges = lo + width * np.arange(1, n_bins)
    return DiscretizedColumn(bins=bins, n_bins=n_bins, edges=edges)


def make_synthetic(
    n_samples: int,
    n_features: int,
    n_informative: int,
    class_separation: float,
    rng_seed: int,
) -> tuple[Dataset, list[int]]:
    """Generate a balanced two-class dataset with planted informative columns.

    Informative columns are unit-variance normal with class-conditional
    means at +/- class_separation / 2; all other columns are
    class-independent standard normal noise.

    Returns:
        The dataset and the sorted list of planted feature indices.
    """
    if n_samples < 4:
        raise ValueError("n_samples must be >= 4")
    if n_samples % 2 != 0:
        raise ValueError("n_samples must be even (balanced two-class data)")
    if n_features < 1:
        raise ValueError("n_features must be >= 1")
    if not 0 <= n_informative <= n_features:
        raise ValueError("n_informative must be in [0, n_features]")
    if class_separation < 0:
        raise ValueError("class_separation must be >= 0")

    rng = rng_from(rng_seed)
    planted = np.sort(rng.choice(n_features, size=n_informative, replace=False))
    labels = rng.permutation(np.repeat([0, 1], n_samples // 2))
    values = rng.standard_normal((n_samples, n_features))
    shift = np.where(labels == 0, -class_separation / 2.0, class_separation / 2.0)
    values[:, planted] += shift[:, None]

    feature_names = [f"f{j}" for j in range(n_features)]
    ds = Dataset(values, labels, feature_names, ["a", "b"])
    return ds, [int(j) for j in planted]
