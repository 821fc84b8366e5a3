import pytest
from hypothesis import given, strategies as st

from wbinom import Laurent, big_weight, wbinom
from wbinom.identities import conv1_check, conv1_rhs, conv2_check, conv2_rhs, conv_term, inversion_check, matrix_f, matrix_g

span = st.integers(-4, 4)


def test_conv1_examples():
    assert conv1_rhs(1, 1, 1) == big_weight(1, 1) + 1 == wbinom(2, 1)
    assert conv1_rhs(3, -2, 0) == Laurent(1)
    assert conv1_check(-2, 3, 2).passed
    with pytest.raises(ValueError):
        conv1_rhs(1, 1, -1)


def test_conv2_examples():
    r = conv2_check(-1, -1, -2)
    assert r.passed and r.lhs == Laurent(1)
    # k = n + m here, so the left side is C(-1, -1) = 1, not 0
    r = conv2_check(2, -3, -1)
    assert r.passed and r.lhs == Laurent(1)
    # n + m < k < 0: both sides vanish
    r = conv2_check(2, -5, -1)
    assert r.passed and r.lhs == r.rhs == Laurent(0)
    assert conv2_check(-2, -2, -3).passed


def test_single_join_term():
    assert conv2_rhs(-1, -1, -2) == conv_term(-1, -1, -2, -1)


@given(span, span, st.integers(0, 6))
def test_conv1_grid(n, m, k):
    assert conv1_check(n, m, k).passed


@given(span, span, st.integers(0, 6))
def test_conv2_grid(n, m, window):
    assert conv2_check(n, m, n + m - window).passed


@given(span, span, st.integers(0, 6))
def test_both_convolutions_share_lhs(n, m, k):
    if k <= n + m:
        a, b = conv1_check(n, m, k), conv2_check(n, m, k)
        assert a.lhs == b.lhs and a.rhs == b.rhs


@pytest.mark.parametrize("m", [-2, 0, 2])
def test_inversion_diagonal_and_next(m):
    for l in range(-3, 4):
        assert matrix_f(m, l, l) * matrix_g(m, l, l) == Laurent(1)
        r = inversion_check(m, l + 1, l)
        assert r.passed and r.lhs == Laurent(0)


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_inversion_grid(m, n, l):
    assert inversion_check(m, n, l).passed


def test_triangularity():
    assert matrix_f(0, 1, 2) == Laurent(0)
    assert matrix_g(0, 1, 2) == Laurent(0)
