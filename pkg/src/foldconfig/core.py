"""Fold configurations of k-fold cross-validation and their enumeration.

A fold configuration is a ``k x m`` matrix of non-negative integers whose
entry ``(i, j)`` is the number of records of class ``j`` placed in fold ``i``.
Row sums are the fold sizes, column sums are the class counts. Two
configurations that differ only by the order of their folds are the same
configuration; the *standardized* representative orders rows by size first
and lexicographically second.

All matrices are tuples of row tuples so that they hash, compare and can be
collected into sets directly.
"""

from __future__ import annotations

import operator
from typing import Iterable, Iterator, Sequence, Tuple

Row = Tuple[int, ...]
FoldConfiguration = Tuple[Row, ...]
StandardizedFoldConfiguration = FoldConfiguration


class InvalidArgumentError(ValueError):
    """Raised when an instance violates the preconditions of an operation."""


def _as_int(value, what: str) -> int:
    try:
        return operator.index(value)
    except TypeError:
        raise InvalidArgumentError(f"{what} must be an integer, got {value!r}") from None


class ClassDistribution(tuple):
    """Per-class record counts of a dataset.

    >>> ClassDistribution([2, 24, 64]).total
    90
    """

    def __new__(cls, counts: Iterable[int]) -> "ClassDistribution":
        counts = tuple(_as_int(c, "class count") for c in counts)
        if not counts:
            raise InvalidArgumentError("at least one class is required")
        if any(c < 0 for c in counts):
            raise InvalidArgumentError(f"class counts must be non-negative, got {counts}")
        if not any(counts):
            raise InvalidArgumentError("at least one class must have a record")
        return super().__new__(cls, counts)

    @property
    def total(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"ClassDistribution({list(self)})"


class FoldSizes(tuple):
    """Fold cardinalities in canonical (non-decreasing) order."""

    def __new__(cls, sizes: Iterable[int]) -> "FoldSizes":
        sizes = tuple(_as_int(s, "fold size") for s in sizes)
        if not sizes:
            raise InvalidArgumentError("at least one fold is required")
        if any(s < 1 for s in sizes):
            raise InvalidArgumentError(f"folds must not be empty, got sizes {sizes}")
        if any(a > b for a, b in zip(sizes, sizes[1:])):
            raise InvalidArgumentError(
                f"fold sizes must be in non-decreasing order, got {sizes}"
            )
        return super().__new__(cls, sizes)

    @classmethod
    def from_total(cls, n_records: int, k: int) -> "FoldSizes":
        return fold_sizes(n_records, k)

    @property
    def total(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"FoldSizes({list(self)})"


def fold_sizes(n_records: int, k: int) -> FoldSizes:
    """Sizes of the ``k`` folds of a dataset with ``n_records`` records.

    ``N mod k`` folds get one extra record; the small folds come first.

    >>> fold_sizes(301, 3)
    FoldSizes([100, 100, 101])
    """
    n_records = _as_int(n_records, "record count")
    k = _as_int(k, "fold count")
    if n_records < 1:
        raise InvalidArgumentError("record count must be positive")
    if k < 1:
        raise InvalidArgumentError("fold count must be positive")
    if k > n_records:
        raise InvalidArgumentError(
            f"fold count exceeds records ({k} > {n_records}): a fold would be empty"
        )
    small, n_large = divmod(n_records, k)
    return FoldSizes([small] * (k - n_large) + [small + 1] * n_large)


def _row_key(row: Sequence[int]):
    return (sum(row), tuple(row))


def standardize(config: Iterable[Sequence[int]]) -> StandardizedFoldConfiguration:
    """Canonical row order: by row sum, then lexicographically."""
    return tuple(sorted((tuple(row) for row in config), key=_row_key))


def is_standardized(config: FoldConfiguration) -> bool:
    return all(_row_key(a) <= _row_key(b) for a, b in zip(config, config[1:]))


def margins(config: FoldConfiguration) -> tuple[Row, Row]:
    """Row sums and column sums of a configuration."""
    return tuple(sum(row) for row in config), tuple(sum(col) for col in zip(*config))


# -- enumeration -------------------------------------------------------------


def _check_two_fold_sizes(n0: int, n1: int) -> tuple[int, int]:
    n0 = _as_int(n0, "fold size")
    n1 = _as_int(n1, "fold size")
    if n0 < 1 or n1 < 1:
        raise InvalidArgumentError(f"fold sizes must be positive, got ({n0}, {n1})")
    return n0, n1


def _split_range(n0: int, n1: int, c0: int, symmetric: bool) -> range:
    # Admissible record counts of the first class in fold 0. With symmetric
    # folds only the half where fold 0 gets no more than fold 1 is kept.
    upper = min(c0 // 2, n0) if symmetric else min(c0, n0)
    lower = max(c0 - n1, 0)
    return range(lower, upper + 1)


def partition_2_2(n0: int, n1: int, c0: int) -> Iterator[FoldConfiguration]:
    """Two folds, two classes: all ways to split ``c0`` records of class 0.

    The second class has ``n0 + n1 - c0`` records. For folds of equal size
    each configuration is produced once, not once per fold order.

    >>> list(partition_2_2(2, 2, 2))
    [((0, 2), (2, 0)), ((1, 1), (1, 1))]
    """
    n0, n1 = _check_two_fold_sizes(n0, n1)
    c0 = _as_int(c0, "class count")
    if not 0 <= c0 <= n0 + n1:
        raise InvalidArgumentError(
            f"class count {c0} does not fit into folds of sizes ({n0}, {n1})"
        )
    return _partition_2_2(n0, n1, c0)


def _partition_2_2(n0: int, n1: int, c0: int) -> Iterator[FoldConfiguration]:
    for i in _split_range(n0, n1, c0, n0 == n1):
        yield (i, n0 - i), (c0 - i, n1 - c0 + i)


def _two_fold_rows(
    caps0: int,
    caps1: int,
    counts: Sequence[int],
    j: int,
    tied: bool,
    floor: Row | None,
    row0: list,
    row1: list,
) -> Iterator[None]:
    # Distributes classes j.. over two folds with remaining capacities
    # caps0 / caps1, writing into row0 / row1 and yielding once per filling.
    # Fillings come out with row0 in ascending lexicographic order.
    # tied: the folds are equal-sized and the rows agree on every class
    # before j, so swapping them gives the same configuration; only
    # row0 <= row1 is produced.
    # floor: row0 agrees with this row on every class before j and must not
    # end up lexicographically smaller than it.
    c = counts[j]
    if j == len(counts) - 1:
        # last class: caps0 + caps1 == c, nothing left to choose
        if floor is not None and caps0 < floor[j]:
            return
        row0[j] = caps0
        row1[j] = caps1
        yield
        return
    split = _split_range(caps0, caps1, c, tied)
    start = split.start
    if floor is not None and floor[j] > start:
        start = floor[j]
    if j == len(counts) - 2:
        # inlined last class; it may only break a tie with the floor
        last = j + 1
        for i in range(start, split.stop):
            if floor is not None and i == floor[j] and caps0 - i < floor[last]:
                continue
            row0[j] = i
            row1[j] = c - i
            row0[last] = caps0 - i
            row1[last] = caps1 - c + i
            yield
        return
    for i in range(start, split.stop):
        row0[j] = i
        row1[j] = c - i
        yield from _two_fold_rows(
            caps0 - i,
            caps1 - c + i,
            counts,
            j + 1,
            tied and 2 * i == c,
            floor if floor is not None and i == floor[j] else None,
            row0,
            row1,
        )


def _check_margins(sizes: Sequence[int], counts: Sequence[int]) -> None:
    if sum(sizes) != sum(counts):
        raise InvalidArgumentError(
            f"fold sizes sum to {sum(sizes)} but class counts sum to {sum(counts)}"
        )


def partition_2_m(n0: int, n1: int, c: Sequence[int]) -> Iterator[FoldConfiguration]:
    """Two folds of sizes ``n0`` and ``n1``, ``m`` classes with counts ``c``.

    Yields every ``2 x m`` matrix with row sums ``(n0, n1)`` and column sums
    ``c``. When ``n0 == n1`` the fold swap is factored out: of a mirrored pair
    only the one whose first row is lexicographically smaller is produced.

    >>> list(partition_2_m(1, 2, (1, 1, 1)))
    [((0, 0, 1), (1, 1, 0)), ((0, 1, 0), (1, 0, 1)), ((1, 0, 0), (0, 1, 1))]
    """
    n0, n1 = _check_two_fold_sizes(n0, n1)
    counts = ClassDistribution(c)
    _check_margins((n0, n1), counts)
    return _partition_2_m(n0, n1, counts, n0 == n1)


def _partition_2_m(n0, n1, counts, symmetric) -> Iterator[FoldConfiguration]:
    m = len(counts)
    row0 = [0] * m
    row1 = [0] * m
    for _ in _two_fold_rows(n0, n1, counts, 0, symmetric, None, row0, row1):
        yield tuple(row0), tuple(row1)


def partition_k_m(n: Sequence[int], c: Sequence[int]) -> Iterator[StandardizedFoldConfiguration]:
    """All distinct standardized fold configurations for sizes ``n`` and counts ``c``.

    Fold 0 is split off against the union of the remaining folds, the
    remaining folds are solved recursively with the class counts left over,
    and among equal-sized neighbouring folds only lexicographically ordered
    rows are kept. The stream order is deterministic.

    >>> list(partition_k_m((1, 1), (1, 1)))
    [((0, 1), (1, 0))]
    """
    sizes = FoldSizes(n)
    counts = ClassDistribution(c)
    _check_margins(sizes, counts)
    return _partition_k_m(sizes, counts)


def _partition_k_m(sizes, counts) -> Iterator[StandardizedFoldConfiguration]:
    if len(sizes) == 1:
        yield (tuple(counts),)
        return
    if len(counts) == 1:
        yield tuple((s,) for s in sizes)
        return
    rows: list = [None] * len(sizes)
    yield from _k_fold_rows(sizes, 0, tuple(counts), None, rows)


def _k_fold_rows(sizes, f, counts, floor, rows):
    # Fold f against the union of folds f+1..; the remaining folds are then
    # solved for the class counts left over. A fold must not be
    # lexicographically smaller than an equal-sized predecessor; instead of
    # generating and discarding such rows, the predecessor is handed down as
    # a floor for the split, which yields the same stream in the same order.
    n0 = sizes[f]
    n_rest = sum(sizes[f + 1:])
    last_pair = f == len(sizes) - 2
    same_size_next = n0 == sizes[f + 1]
    row0 = [0] * len(counts)
    rest = [0] * len(counts)
    for _ in _two_fold_rows(n0, n_rest, counts, 0, n0 == n_rest, floor, row0, rest):
        rows[f] = current = tuple(row0)
        if last_pair:
            rows[f + 1] = tuple(rest)
            yield tuple(rows)
            continue
        yield from _k_fold_rows(
            sizes, f + 1, tuple(rest), current if same_size_next else None, rows
        )


def iter_configurations(c: Sequence[int], k: int) -> Iterator[StandardizedFoldConfiguration]:
    """Enumerate for class counts ``c`` split into ``k`` folds."""
    counts = ClassDistribution(c)
    return partition_k_m(fold_sizes(counts.total, k), counts)
