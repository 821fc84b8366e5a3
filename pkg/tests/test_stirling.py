from functools import lru_cache

from hypothesis import given, strategies as st

from wbinom.specializations.qbinom import unit_weights
from wbinom.specializations.stirling import (
    classical_first,
    classical_second,
    first,
    first_rec,
    second,
    second_rec,
    stirling_checks,
)
from wbinom.weights import substitute

span = st.integers(-4, 4)


@lru_cache(maxsize=None)
def cycles(n, k):
    """Unsigned first kind by the cycle-count recurrence."""
    if n == 0 or k == 0:
        return int(n == k)
    return (n - 1) * cycles(n - 1, k) + cycles(n - 1, k - 1)


@lru_cache(maxsize=None)
def partitions(n, k):
    if n == 0 or k == 0:
        return int(n == k)
    return k * partitions(n - 1, k) + partitions(n - 1, k - 1)


def at_one(p):
    return substitute(p, unit_weights())


def test_known_values():
    assert at_one(first(4, 2)) == 11 == classical_first(4, 2)
    assert at_one(second(4, 2)) == 7 == classical_second(4, 2)
    assert at_one(second(-2, -4)) == 11
    assert first(2, 5) == second(2, 5) == 0


@given(st.integers(0, 7), st.integers(0, 7))
def test_unit_weights_give_classical_numbers(n, k):
    assert at_one(first(n, k)) == (-1) ** (n - k) * cycles(n, k) if k <= n else at_one(first(n, k)) == 0
    assert at_one(second(n, k)) == partitions(n, k)


@given(span, span)
def test_classical_duality(n, k):
    assert at_one(first(n, k)) == (-1) ** ((n - k) % 2) * at_one(second(-k, -n))


@given(span, span, st.integers(-2, 2))
def test_weighted_duality(n, k, alpha):
    if k <= n:
        assert first(n, k, alpha) == second(-k - 1, -n - 1, alpha + n)


@given(span, span, st.integers(-2, 2))
def test_formula_matches_recurrence(n, k, alpha):
    assert first(n, k, alpha) == first_rec(n, k, alpha)
    assert second(n, k, alpha) == second_rec(n, k, alpha)


def test_full_suite_passes():
    reports = stirling_checks(ns=range(-3, 4), alphas=range(-1, 2), conv_ns=range(-2, 3), conv_ks=range(0, 3), window=2)
    assert reports and all(r.passed for r in reports)
