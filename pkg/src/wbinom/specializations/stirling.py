"""Weighted Stirling numbers built on the weighted integers ``C(n, 1)``.

``first(n, k, alpha)`` is ``e_{n-k}`` of ``-[alpha], ..., -[alpha+n-1]`` and
``second(n, k, alpha)`` is ``h_{n-k}`` of ``[alpha], ..., [alpha+k]``; both
are zero for ``k > n``.  With every weight set to 1 they are the signed
Stirling numbers of the first kind and the Stirling numbers of the second kind.

``extended=True`` drops the ``k > n`` convention and reads the hybrid-set
formula literally; that needs inverses of weighted integers and raises
:class:`~wbinom.laurent.NonInvertibleError` when ``[0] = 0`` would be inverted.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from ..core import weighted_integer
from ..laurent import NonInvertibleError
from ..identities import IdentityReport
from ..weights import ZERO, substitute, sum_range
from .qbinom import unit_weights
from .symmetric import complete, elementary, new_set


def _neg_int(i):
    return -weighted_integer(i)


@lru_cache(maxsize=None)
def first(n: int, k: int, alpha: int = 0, extended: bool = False):
    if k > n and not extended:
        return ZERO
    return ZERO + elementary(new_set(alpha, alpha + n - 1, _neg_int), n - k)


@lru_cache(maxsize=None)
def second(n: int, k: int, alpha: int = 0, extended: bool = False):
    if k > n and not extended:
        return ZERO
    return ZERO + complete(new_set(alpha, alpha + k, weighted_integer), n - k)


@lru_cache(maxsize=None)
def first_rec(n: int, k: int, alpha: int = 0):
    """Same numbers from ``s(n,k) = s(n-1,k-1) - [alpha+n-1] s(n-1,k)``."""
    if k > n:
        return ZERO
    if n == 0:
        return ZERO + int(k == 0)
    if n > 0:
        return first_rec(n - 1, k - 1, alpha) - weighted_integer(alpha + n - 1) * first_rec(n - 1, k, alpha)
    # the recurrence at (n+1, k+1), solved for s(n, k)
    return first_rec(n + 1, k + 1, alpha) + weighted_integer(alpha + n) * first_rec(n, k + 1, alpha)


@lru_cache(maxsize=None)
def second_rec(n: int, k: int, alpha: int = 0):
    """Same numbers from ``S(n,k) = [alpha+k] S(n-1,k) + S(n-1,k-1)``."""
    if k > n:
        return ZERO
    if n == 0:
        return ZERO + int(k == 0)
    if n > 0:
        return weighted_integer(alpha + k) * second_rec(n - 1, k, alpha) + second_rec(n - 1, k - 1, alpha)
    return second_rec(n + 1, k + 1, alpha) - weighted_integer(alpha + k + 1) * second_rec(n, k + 1, alpha)


def classical_first(n: int, k: int) -> int:
    """Signed Stirling numbers of the first kind for ``n, k >= 0``: falling factorial coefficients."""
    poly = [1]
    for i in range(n):
        poly = [0] + poly
        for d in range(len(poly) - 1):
            poly[d] -= i * poly[d + 1]
    return poly[k] if 0 <= k < len(poly) else 0


def classical_second(n: int, k: int) -> int:
    if n < 0 or k < 0:
        return 0
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


def stirling_checks(ns=range(-4, 5), alphas=range(-2, 3), conv_ns=range(-3, 4), conv_ks=range(0, 5), window=4):
    """All Stirling checks.

    The second form of each convolution is checked with ``extended`` values;
    instances where some term would divide by ``[0]`` lie outside the
    identity's domain and are skipped.
    """
    out = []
    add = out.append
    one = unit_weights()
    for alpha in alphas:
        for n in ns:
            for k in ns:
                add(IdentityReport.exact("first-recurrence", (n, k, alpha), first(n, k, alpha), first_rec(n, k, alpha)))
                add(IdentityReport.exact("second-recurrence", (n, k, alpha), second(n, k, alpha), second_rec(n, k, alpha)))
                if k <= n:
                    add(IdentityReport.exact("weighted-duality", (n, k, alpha), first(n, k, alpha),
                                             second(-k - 1, -n - 1, alpha + n)))
    for n in ns:
        for k in ns:
            s = substitute(first(n, k), one)
            add(IdentityReport.exact("classical-duality", (n, k), s,
                                     (-1) ** ((n - k) % 2) * substitute(second(-k, -n), one)))
    for n in range(0, 7):
        for k in range(0, 7):
            add(IdentityReport.exact("classical-first", (n, k), substitute(first(n, k), one), classical_first(n, k)))
            add(IdentityReport.exact("classical-second", (n, k), substitute(second(n, k), one), classical_second(n, k)))
    for n in conv_ns:
        for m in conv_ns:
            def s_term(k, j, ext=False):
                return second(n, n - j, 0, ext) * first(k - j - m - 1, -m - 1, n + m - k + 1, ext)

            def f_term(k, j, ext=False):
                return first(n, n - j, 0, ext) * second(k - j - m - 1, -m - 1, n + m, ext)

            for k in conv_ks:
                add(IdentityReport.exact("second-conv1", (n, m, k), second(n + m, n + m - k),
                                         sum_range(0, k, lambda j: s_term(k, j), ZERO)))
                add(IdentityReport.exact("first-conv1", (n, m, k), first(n + m, n + m - k),
                                         sum_range(0, k, lambda j: f_term(k, j), ZERO)))
            for k in range(n + m - window, n + m + 1):
                for name, lhs, term in (("second-conv2", second, s_term), ("first-conv2", first, f_term)):
                    try:
                        left = lhs(n + m, n + m - k, 0, True)
                        right = sum_range(k - m, n, lambda j: term(k, j, True), ZERO)
                    except NonInvertibleError:
                        continue
                    add(IdentityReport.exact(name, (n, m, k), left, right))
    return out
