"""Brute-force reference enumeration, for verification only.

Nothing here reuses the recursive generators of :mod:`foldconfig.core`: every
matrix with the required margins is visited in plain row-major order, each is
sorted into canonical row order, and duplicates are removed by a set.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from functools import lru_cache
from typing import Sequence

from .core import ClassDistribution, FoldSizes, InvalidArgumentError

MAX_SEARCH_NODES = 10**7


class OracleTooLarge(InvalidArgumentError):
    """The instance is too big to search exhaustively."""


def search_size(n: Sequence[int], c: Sequence[int]) -> int:
    """Upper estimate of the unpruned search tree.

    Only the ``(k-1) x (m-1)`` leading cells are free; the last row and the
    last column follow from the margins.
    """
    return math.prod(min(a, b) + 1 for a in n[:-1] for b in c[:-1])


def _validate(n, c, max_nodes):
    n = FoldSizes(n)
    c = ClassDistribution(c)
    if sum(n) != sum(c):
        raise InvalidArgumentError(f"margins disagree: sum(n)={sum(n)}, sum(c)={sum(c)}")
    size = search_size(n, c)
    if size > max_nodes:
        raise OracleTooLarge(
            f"exhaustive search would visit about {size} nodes (limit {max_nodes})"
        )
    return n, c


def _rows_with_sum(total, caps):
    for row in itertools.product(*(range(cap + 1) for cap in caps)):
        if sum(row) == total:
            yield row


def _all_matrices(n, caps):
    if len(n) == 1:
        if sum(caps) == n[0]:
            yield (tuple(caps),)
        return
    for row in _rows_with_sum(n[0], caps):
        left = [cap - x for cap, x in zip(caps, row)]
        for tail in _all_matrices(n[1:], left):
            yield (row,) + tail


def oracle_enumerate(n, c, max_nodes: int = MAX_SEARCH_NODES) -> set:
    """Every distinct standardized configuration, found by exhaustive search."""
    n, c = _validate(n, c, max_nodes)
    found = set()
    for matrix in _all_matrices(tuple(n), tuple(c)):
        found.add(tuple(sorted(matrix, key=lambda row: (sum(row), row))))
    return found


def oracle_count(n, c, max_nodes: int = MAX_SEARCH_NODES) -> int:
    return len(oracle_enumerate(n, c, max_nodes))


def multiset_count(n, c) -> int:
    """Count configurations as multisets of fold rows, without enumerating them.

    Folds of one size are interchangeable, so for each size the rows form a
    multiset. A dynamic program over the candidate rows decides how many
    folds take each row. Different sizes are combined by
    summing over how the classes are shared between the size groups.
    Works well beyond the reach of :func:`oracle_enumerate`.
    """
    n = FoldSizes(n)
    c = ClassDistribution(c)
    if sum(n) != sum(c):
        raise InvalidArgumentError(f"margins disagree: sum(n)={sum(n)}, sum(c)={sum(c)}")
    groups = sorted(Counter(n).items())
    return _count_groups(tuple(groups), tuple(c))


def _compositions(total, caps):
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    for x in range(min(total, caps[0]) + 1):
        for tail in _compositions(total - x, caps[1:]):
            yield (x,) + tail


def _count_groups(groups, counts):
    (size, folds), rest = groups[0], groups[1:]
    if not rest:
        return _count_equal(size, folds, counts)
    total = 0
    for share in _compositions(size * folds, counts):
        left = tuple(a - b for a, b in zip(counts, share))
        here = _count_equal(size, folds, share)
        if here:
            total += here * _count_groups(rest, left)
    return total


@lru_cache(maxsize=None)
def _count_equal(size, folds, counts):
    # ways[(folds left, class counts left)] after deciding the multiplicity
    # of every candidate row seen so far
    ways = {(folds, counts): 1}
    for row in _compositions(size, counts):
        nxt = defaultdict(int)
        for (folds_left, left), w in ways.items():
            while True:
                nxt[folds_left, left] += w
                folds_left -= 1
                left = tuple(a - b for a, b in zip(left, row))
                if folds_left < 0 or min(left) < 0:
                    break
        ways = nxt
    return ways.get((0, (0,) * len(counts)), 0)
