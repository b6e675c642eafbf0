"""Exact counts of standardized fold configurations."""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence

from .core import (
    ClassDistribution,
    FoldSizes,
    InvalidArgumentError,
    _as_int,
    fold_sizes,
    partition_k_m,
)


@dataclass(frozen=True)
class SweepRow:
    k: int
    sizes: FoldSizes
    count: int
    elapsed_ms: float


def count_configurations(n: Sequence[int], c: Sequence[int]) -> int:
    """Number of distinct standardized configurations for sizes ``n`` and counts ``c``.

    Walks the enumeration and counts; nothing is stored.
    """
    count = 0
    for _ in partition_k_m(n, c):
        count += 1
    return count


def sweep(c: Sequence[int], k_min: int, k_max: int) -> List[SweepRow]:
    """Configuration counts for every fold count from ``k_min`` to ``k_max``."""
    counts = ClassDistribution(c)
    k_min = _as_int(k_min, "k_min")
    k_max = _as_int(k_max, "k_max")
    if k_min < 1:
        raise InvalidArgumentError("k_min must be at least 1")
    if k_min > k_max:
        raise InvalidArgumentError(f"k_min ({k_min}) exceeds k_max ({k_max})")
    if k_max > counts.total:
        raise InvalidArgumentError(
            f"fold count exceeds records ({k_max} > {counts.total})"
        )
    rows = []
    for k in range(k_min, k_max + 1):
        sizes = fold_sizes(counts.total, k)
        start = time.perf_counter()
        count = count_configurations(sizes, counts)
        elapsed = (time.perf_counter() - start) * 1000.0
        rows.append(SweepRow(k, sizes, count, elapsed))
    return rows


def count_binary_equal_folds(c0: int, k: int, fold_size: int) -> int:
    """Configurations of a two-class problem over ``k`` folds of equal size.

    The split of class 0 determines everything, so this is the number of
    partitions of ``c0`` into at most ``k`` parts, none larger than
    ``fold_size``.
    """
    c0 = _as_int(c0, "class count")
    k = _as_int(k, "fold count")
    fold_size = _as_int(fold_size, "fold size")
    if k < 1 or fold_size < 1:
        raise InvalidArgumentError("fold count and fold size must be positive")
    if not 0 <= c0 <= k * fold_size:
        raise InvalidArgumentError(
            f"class count {c0} does not fit into {k} folds of size {fold_size}"
        )
    return _bounded_partitions(c0, k, fold_size)


@lru_cache(maxsize=None)
def _bounded_partitions(total: int, parts: int, largest: int) -> int:
    # Partitions fitting a parts x largest box: either some part is zero
    # (drop one part), or all parts are positive (take one from each).
    if total == 0:
        return 1
    if total < 0 or parts == 0 or largest == 0:
        return 0
    return _bounded_partitions(total, parts - 1, largest) + _bounded_partitions(
        total - parts, parts, largest - 1
    )
