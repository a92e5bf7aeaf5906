"""Stable feature selection from area-normalized occurrence histograms.

Filter criteria are rerun on many random training subsets; feature
occurrences in the per-round top-k lists are histogrammed and normalized
to unit area, a cumulative-area threshold is picked at peak cross-validated
accuracy, and the stable set is ranked by per-feature cross-validation.
"""

from .backend import HAVE_COMPILED, backend_name
from .criteria import (
    Criterion,
    FeatureRanking,
    chi_square_score,
    fisher_score,
    info_gain_score,
    rank_features,
    top_k,
)
from .data import (
    Dataset,
    DiscretizedColumn,
    SplitIndices,
    discretize_column,
    load_csv,
    make_synthetic,
    split_equal,
    subsample,
)
from .evaluation import (
    CriterionComparison,
    ExperimentReport,
    MethodResult,
    conventional_select,
    cv_accuracy,
    jaccard_stability,
    kfold,
    run_comparison,
)
from .naive_bayes import NaiveBayesModel, accuracy, fit, predict, predict_batch
from .stability import (
    FeatureHistogram,
    HistogramConfig,
    SelectionResult,
    build_histogram,
    cumulative_area,
    rank_stable_features,
    select,
    select_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "Criterion",
    "CriterionComparison",
    "Dataset",
    "DiscretizedColumn",
    "ExperimentReport",
    "FeatureHistogram",
    "FeatureRanking",
    "HAVE_COMPILED",
    "HistogramConfig",
    "MethodResult",
    "NaiveBayesModel",
    "SelectionResult",
    "SplitIndices",
    "accuracy",
    "backend_name",
    "build_histogram",
    "chi_square_score",
    "conventional_select",
    "cumulative_area",
    "cv_accuracy",
    "discretize_column",
    "fisher_score",
    "fit",
    "info_gain_score",
    "jaccard_stability",
    "kfold",
    "load_csv",
    "make_synthetic",
    "predict",
    "predict_batch",
    "rank_features",
    "rank_stable_features",
    "run_comparison",
    "select",
    "select_threshold",
    "split_equal",
    "subsample",
    "top_k",
]
