"""Enumerate and count the distinct fold configurations of k-fold cross-validation."""

from .core import (
    ClassDistribution,
    FoldConfiguration,
    FoldSizes,
    InvalidArgumentError,
    StandardizedFoldConfiguration,
    fold_sizes,
    is_standardized,
    iter_configurations,
    margins,
    partition_2_2,
    partition_2_m,
    partition_k_m,
    standardize,
)
from .counting import SweepRow, count_binary_equal_folds, count_configurations, sweep

__all__ = [
    "ClassDistribution",
    "FoldConfiguration",
    "FoldSizes",
    "InvalidArgumentError",
    "StandardizedFoldConfiguration",
    "SweepRow",
    "count_binary_equal_folds",
    "count_configurations",
    "fold_sizes",
    "is_standardized",
    "iter_configurations",
    "margins",
    "partition_2_2",
    "partition_2_m",
    "partition_k_m",
    "standardize",
    "sweep",
]
