from math import comb

import pytest
from hypothesis import given, strategies as st

from wbinom import HybridPath, Laurent, UnsupportedCaseError, big_weight, wbinom
from wbinom.identities import conv1_rhs
from wbinom.paths import (
    HybridSubset,
    PathPair,
    enumerate_pairs,
    enumerate_paths,
    in_fixed_set,
    inner_corners,
    iota,
    pair_weight,
    path_sum,
    path_to_subset,
    path_weight_area,
    path_weight_steps,
    subset_to_path,
    subset_weight,
    subsets_of,
)
from wbinom.weights import w

FIG1 = HybridPath.parse("E N E N E E")
FIG2_LEFT = HybridPath.parse("S ES S ES")
FIG2_RIGHT = HybridPath.parse("W NW W NW")


def units(text):
    return HybridPath.from_units(text.split())


def test_small_enumerations():
    assert [str(p) for p in enumerate_paths(0, 3)] == ["N N N"]
    assert len(enumerate_paths(2, -4)) == 3
    assert enumerate_paths(-1, -1) == []
    assert {str(p) for p in enumerate_paths(1, 1)} == {"E N", "N E"}


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_path_count_is_absolute_binomial(n, k):
    # unsigned count of hybrid subsets, computed independently
    if n >= 0:
        want = comb(n, k) if 0 <= k <= n else 0
    elif k >= 0:
        want = comb(k - n - 1, k)
    else:
        want = comb(-k - 1, n - k) if k <= n else 0
    assert len(enumerate_paths(k, n - k)) == want


def test_figure_paths_step_weights():
    assert path_weight_steps(FIG1) == w(2, 1) * w(3, 1) * w(3, 2) * w(4, 1) * w(4, 2)
    assert path_weight_steps(FIG1) == big_weight(1, 0) * big_weight(2, 1) * big_weight(3, 2) * big_weight(4, 2)
    left = (w(1, 0) * w(2, 0) * w(2, -1) * w(2, -2)) ** -1
    right = (w(-1, 1) * w(-2, 1) * w(-3, 1) * w(-3, 2)) ** -1
    assert path_weight_steps(FIG2_LEFT) == left
    assert path_weight_steps(FIG2_RIGHT) == right


def test_figure_paths_area_weights():
    for p in (FIG1, FIG2_LEFT, FIG2_RIGHT):
        assert path_weight_area(p) == path_weight_steps(p)
    assert path_weight_area(HybridPath(())) == Laurent(1)


def test_inner_corners():
    assert inner_corners(FIG1) == [(2, 1), (3, 2)]
    assert inner_corners(FIG2_LEFT) == [(1, 0), (2, -2)]
    assert inner_corners(FIG2_RIGHT) == [(-1, 1), (-3, 2)]


def test_path_sum_examples():
    assert path_sum(1, 1) == 1 + w(1, 1)
    assert path_sum(2, -4) == wbinom(-2, 2)
    assert path_sum(5, 0) == Laurent(1)


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_path_sum_is_binomial(n, k):
    assert path_sum(k, n - k) == wbinom(n, k)


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_area_and_step_weights_agree(n, k):
    for p in enumerate_paths(k, n - k):
        assert path_weight_area(p) == path_weight_steps(p)


def test_figure_subsets():
    cases = [
        (HybridSubset(6, 4, (1, 3, 5, 6)), FIG1, "{1,3,5,6|}"),
        (HybridSubset(-2, 2, (0, -1)), FIG2_LEFT, "{0,-1|}"),
        (HybridSubset(-2, -4, (0, 0, -1, -1)), FIG2_RIGHT, "{|0,0,-1,-1}"),
    ]
    for y, p, text in cases:
        assert subset_to_path(y) == p
        assert path_to_subset(p) == y
        assert str(y) == text


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_subset_bijection_and_weights(n, k):
    subsets = subsets_of(n, k)
    paths = {subset_to_path(y) for y in subsets}
    assert paths == set(enumerate_paths(k, n - k))
    assert all(path_to_subset(subset_to_path(y)) == y for y in subsets)
    total = Laurent(0)
    for y in subsets:
        total = total + subset_weight(y)
    assert total == wbinom(n, k)


def test_pairs_small():
    pairs = enumerate_pairs(1, 1, 1)
    assert sorted(pp.j for pp in pairs) == [0, 1]
    with pytest.raises(UnsupportedCaseError):
        enumerate_pairs(1, 1, -1)


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(0, 4))
def test_pair_weights_sum_to_convolution(n, m, k):
    total = Laurent(0)
    for pp in enumerate_pairs(n, m, k):
        total = total + pair_weight(pp)
    assert total == conv1_rhs(n, m, k)


def test_figure_involution_pair():
    before = PathPair(6, -4, 5, 3, units("E N E E N N"), units("S S S S E S E S"))
    after = PathPair(6, -4, 5, 2, units("E N E N N N"), units("S S S E S S E S E S"))
    assert iota(before) == after
    assert iota(after) == before
    assert after.second.combos == before.second.combos + 1
    assert pair_weight(after) == -pair_weight(before)


def test_figure_fixed_points():
    q1 = PathPair(10, -3, 4, 4, units("E N E N E E N N N N"), units("S S S"))
    q2 = PathPair(3, -5, 2, 0, units("N N N"), units("S S S S E S S E S"))
    for pp in (q1, q2):
        assert in_fixed_set(pp)
        assert iota(pp) == pp


def test_involution_outside_its_case():
    pp = enumerate_pairs(1, 1, 1)[0]
    with pytest.raises(UnsupportedCaseError):
        iota(pp)


@given(st.integers(0, 4), st.integers(-4, -1), st.integers(0, 5))
def test_involution_properties(n, m, k):
    pairs = enumerate_pairs(n, m, k)
    fixed = Laurent(0)
    for pp in pairs:
        image = iota(pp)
        assert iota(image) == pp
        if image == pp:
            assert in_fixed_set(pp)
            fixed = fixed + pair_weight(pp)
        else:
            assert not in_fixed_set(pp)
            assert pair_weight(image) == -pair_weight(pp)
    assert fixed == wbinom(n + m, k)
