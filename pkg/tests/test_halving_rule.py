"""Why the equal-capacity shortcut is not used for two-fold splits.

A tempting rule halves the split range of *every* class whenever the two
remaining fold capacities happen to be equal. The rule is only valid while
the rows are still identical on all earlier classes; applied after an
asymmetric split it silently drops configurations, and the amount dropped
depends on the order of the classes. On the 90-record instance with classes
(64, 24, 2) and five folds it yields 2846 instead of 3364.
"""

from foldconfig import count_configurations, fold_sizes, partition_k_m
from foldconfig.oracle import multiset_count, oracle_enumerate


def _split(n0, n1, c0, symmetric):
    upper = min(c0 // 2, n0) if symmetric else min(c0, n0)
    return range(max(c0 - n1, 0), upper + 1)


def _two_fold_equal_capacity_rule(n0, n1, c):
    for i in _split(n0, n1, c[0], n0 == n1):
        if len(c) == 1:
            yield (i,), (c[0] - i,)
            continue
        for a, b in _two_fold_equal_capacity_rule(n0 - i, n1 - c[0] + i, c[1:]):
            yield (i,) + a, (c[0] - i,) + b


def equal_capacity_rule(n, c):
    if len(n) == 1:
        yield (tuple(c),)
        return
    for row0, rest in _two_fold_equal_capacity_rule(n[0], sum(n[1:]), c):
        if len(n) == 2:
            yield (row0, rest)
            continue
        for sub in equal_capacity_rule(n[1:], rest):
            if n[0] == n[1] and row0 > sub[0]:
                continue
            yield (row0,) + sub


def test_rule_loses_configurations_on_tiny_instance():
    # folds of sizes 1 and 2 with three singleton classes: 3 configurations
    assert len(oracle_enumerate((1, 2), (1, 1, 1))) == 3
    assert len(list(equal_capacity_rule((1, 2), (1, 1, 1)))) == 2
    assert len(list(partition_k_m((1, 2), (1, 1, 1)))) == 3


def test_rule_depends_on_class_order():
    n = fold_sizes(90, 5)
    by_order = {
        c: sum(1 for _ in equal_capacity_rule(n, c)) for c in [(2, 24, 64), (24, 64, 2), (64, 24, 2)]
    }
    assert by_order == {(2, 24, 64): 3364, (24, 64, 2): 3241, (64, 24, 2): 2846}
    for c in by_order:
        assert count_configurations(n, c) == multiset_count(n, c) == 3364
