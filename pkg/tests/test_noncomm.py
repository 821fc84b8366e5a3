import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from wbinom import Laurent, XSeries, commute_powers, expand_pow, expand_second, normalize, wbinom
from wbinom.noncomm import format_word, parse_word
from wbinom.weights import big_weight, w

from strategies import weight_polys

letters = st.lists(st.tuples(st.sampled_from("xy"), st.sampled_from([1, -1])), max_size=9)


def test_parse_and_format():
    assert parse_word("y⁻¹xY x^-1") == [("y", -1), ("x", 1), ("y", -1), ("x", -1)]
    assert format_word(parse_word("xY")) == "x y^-1"
    with pytest.raises(ValueError):
        parse_word("xz")


def test_swap_rules():
    assert normalize("yx") == normalize([("y", 1), ("x", 1)])
    nf = normalize("yx")
    assert (nf.coeff, nf.x, nf.y) == (w(1, 1), 1, 1)
    nf = normalize("y⁻¹x⁻¹")
    assert (nf.coeff, nf.x, nf.y) == (w(0, 0), -1, -1)
    nf = normalize("yyx")
    assert (nf.coeff, nf.x, nf.y) == (w(1, 1) * w(1, 2), 1, 2)


def test_longer_word():
    nf = normalize("Y x Y Y x Y")
    want = (w(1, 0) * w(2, -2) * w(2, -1) * w(2, 0)) ** -1
    assert (nf.coeff, nf.x, nf.y) == (want, 2, -4)


def test_cancellation():
    nf = normalize("x X y Y")
    assert (nf.coeff, nf.x, nf.y) == (Laurent(1), 0, 0)


@given(letters, st.integers(0, 2 ** 32))
def test_confluence(word, seed):
    assert normalize(word, random.Random(seed)) == normalize(word)


def test_commute_powers_examples():
    assert commute_powers(1, 1) == w(1, 1)
    assert commute_powers(0, 5) == Laurent(1)
    assert commute_powers(2, -1) == (w(0, 1) * w(0, 2)) ** -1


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_commute_powers_matches_rewriting(k, l):
    word = [("y", 1 if k > 0 else -1)] * abs(k) + [("x", 1 if l > 0 else -1)] * abs(l)
    nf = normalize(word)
    assert (nf.coeff, nf.x, nf.y) == (commute_powers(k, l), l, k)


def test_expand_pow_examples():
    assert list(expand_pow(2, 2).coeffs) == [Laurent(1), 1 + w(1, 1), Laurent(1)]
    assert list(expand_pow(0, 3).coeffs) == [Laurent(1)] + [Laurent(0)] * 3
    for k, c in enumerate(expand_pow(-1, 3).coeffs):
        want = Laurent((-1) ** k)
        for j in range(1, k + 1):
            want = want * big_weight(j, -j)
        assert c == want
    with pytest.raises(ValueError):
        expand_pow(2, -1)


@pytest.mark.parametrize("n", range(0, 6))
def test_expand_pow_against_word_sum(n):
    # brute force: normalize every word in x, y of length n
    coeffs = [Laurent(0)] * (n + 1)
    for word in product("xy", repeat=n):
        nf = normalize([(c, 1) for c in word])
        coeffs[nf.x] = coeffs[nf.x] + nf.coeff
    assert list(expand_pow(n, n).coeffs) == coeffs


@pytest.mark.parametrize("n", range(-4, 5))
def test_expansions_match_binomials(n):
    for k, c in enumerate(expand_pow(n, 6).coeffs):
        assert c == wbinom(n, k)
    second = expand_second(n, 6)
    assert sorted(second) == list(range(n - 6, n + 1))
    for k, c in second.items():
        assert c == wbinom(n, k)


def test_expand_second_examples():
    assert expand_second(-1, 2)[-1] == Laurent(1)
    assert expand_second(-2, 3)[-3] == wbinom(-2, -3) != Laurent(0)
    assert expand_second(3, 3)[1] == wbinom(3, 1)


@given(st.integers(-3, 3), st.integers(-3, 3))
def test_powers_multiply(a, b):
    K = 4
    assert expand_pow(a, K) * expand_pow(b, K) == expand_pow(a + b, K)


@st.composite
def series(draw, K=2):
    n = draw(st.integers(-2, 2))
    return XSeries(n, tuple(draw(weight_polys(max_terms=2)) for _ in range(K + 1)))


@given(series(), series(), series())
def test_series_product_associative(p, q, r):
    assert (p * q) * r == p * (q * r)
