"""Shared instance generators for the test suite."""

import itertools

from foldconfig import fold_sizes, partition_2_m


def compositions(total, parts):
    """All ordered ways to write ``total`` as ``parts`` positive integers."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def grid(max_n=12, max_m=3, max_k=4):
    """(sizes, counts) for every small instance of the verification grid."""
    for total in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for counts in compositions(total, m):
                for k in range(1, min(max_k, total) + 1):
                    yield fold_sizes(total, k), counts


def guard_filtered(n, c):
    """Split-off-first-fold recursion that discards unordered results afterwards.

    Generates every sub-configuration and drops those whose first row is
    lexicographically larger than an equal-sized successor. Much slower than
    the library, but the obvious reading of the method.
    """
    if len(n) == 1:
        yield (tuple(c),)
        return
    for row0, rest in partition_2_m(n[0], sum(n[1:]), c):
        if len(n) == 2:
            yield (row0, rest)
            continue
        for sub in guard_filtered(n[1:], rest):
            if n[0] == n[1] and row0 > sub[0]:
                continue
            yield (row0,) + sub


# (criterion, passed, detail) for every acceptance check that ran
ACCEPTANCE = []


def record(criterion, passed, detail=""):
    ACCEPTANCE.append((criterion, bool(passed), detail))
    print(f"{'PASS' if passed else 'FAIL'}  {criterion}: {detail}")
    assert passed, f"{criterion}: {detail}"
