"""Weighted binomial coefficients on the whole integer plane."""

from __future__ import annotations

from functools import lru_cache

from .laurent import Laurent
from .weights import (
    ONE,
    ZERO,
    Transform,
    apply_transform,
    big_weight,
    prod_range,
)


def sgn(n: int) -> int:
    return 1 if n >= 0 else -1


def parity_sign(n: int) -> int:
    """``(-1)**n`` for any integer ``n``."""
    return -1 if n % 2 else 1


def region(n: int, k: int) -> int:
    """Which of the six regions of the ``(n, k)`` plane the pair lies in.

    1: ``0 <= k <= n``, 2: ``n < 0 <= k``, 3: ``k <= n < 0``; 4-6 are the
    regions where the coefficient vanishes.
    """
    if 0 <= k <= n:
        return 1
    if n < 0 <= k:
        return 2
    if k <= n < 0:
        return 3
    if 0 <= n < k:
        return 4
    if n < k < 0:
        return 5
    return 6


def make_binomial(weight=big_weight, one=ONE, zero=ZERO):
    """Memoized Pascal recursion for the binomial attached to ``weight(s, t)``.

    ``weight`` is the big weight of the family; values may live in any
    commutative ring where ``weight(s, t) ** -1`` makes sense.
    """

    @lru_cache(maxsize=None)
    def binom(n: int, k: int):
        if k == 0 or k == n:
            return one
        r = region(n, k)
        if r == 1:
            return binom(n - 1, k) + binom(n - 1, k - 1) * weight(k, n - k)
        if r == 2:
            return binom(n + 1, k) - binom(n, k - 1) * weight(k, n + 1 - k)
        if r == 3:
            inv = weight(k + 1, n - k) ** -1
            return binom(n + 1, k + 1) * inv - binom(n, k + 1) * inv
        return zero

    return binom


wbinom = make_binomial()
wbinom.__doc__ = "Formal weighted binomial coefficient ``C(n, k)`` as a :class:`Laurent`."

wbinom_recursive = wbinom


def _prod_big(lo, hi, s_of, t_of):
    return prod_range(lo, hi, lambda j: big_weight(s_of(j), t_of(j)), ONE)


def wbinom_regions(n: int, k: int) -> Laurent:
    """Same values as :func:`wbinom`, built from the region-1 table plus a transform."""
    r = region(n, k)
    if r == 1:
        return wbinom(n, k)
    if r == 2:
        core = apply_transform(wbinom(k - n - 1, k), Transform.BREVE)
        return parity_sign(k) * core * _prod_big(1, k, lambda j: j, lambda j: -j)
    if r == 3:
        core = apply_transform(wbinom(-k - 1, -n - 1), Transform.TILDE)
        tail = _prod_big(1, n - k, lambda j: n + 1 - j, lambda j: j)
        return parity_sign(n - k) * core * tail.inverse()
    return ZERO


def reflect_hat_rhs(n: int, k: int) -> Laurent:
    """Right side of the reflection that swaps ``k`` and ``n - k``."""
    core = apply_transform(wbinom(n, n - k), Transform.HAT)
    return core * _prod_big(1, k, lambda j: j, lambda j: n - k)


def reflect_tilde_rhs(n: int, k: int) -> Laurent:
    core = apply_transform(wbinom(-k - 1, -n - 1), Transform.TILDE)
    tail = _prod_big(1, n - k, lambda j: n + 1 - j, lambda j: j)
    return parity_sign(n - k) * sgn(n - k) * core * tail.inverse()


def reflect_breve_rhs(n: int, k: int) -> Laurent:
    core = apply_transform(wbinom(k - n - 1, k), Transform.BREVE)
    return parity_sign(k) * sgn(k) * core * _prod_big(1, k, lambda j: j, lambda j: -j)


def weighted_integer(n: int) -> Laurent:
    """``C(n, 1)``: the weighted analogue of the integer ``n``."""
    return wbinom(n, 1)
