"""Convolution and matrix-inversion identities for the formal binomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .core import wbinom
from .laurent import Laurent
from .weights import ONE, ZERO, big_weight, prod_range, shift, sum_range


@dataclass
class IdentityReport:
    name: str
    instance: tuple
    lhs: Any
    rhs: Any
    passed: bool
    residual: float = 0.0

    @classmethod
    def exact(cls, name, instance, lhs, rhs) -> IdentityReport:
        same = bool(lhs == rhs)
        return cls(name, tuple(instance), lhs, rhs, same, 0.0 if same else 1.0)


@lru_cache(maxsize=None)
def _shifted(n: int, k: int, dx: int, dy: int) -> Laurent:
    return shift(wbinom(n, k), dx, dy)


def _block(j: int, count: int, height: int) -> Laurent:
    return prod_range(1, count, lambda i: big_weight(i + j, height), ONE)


def conv_term(n: int, m: int, k: int, j: int) -> Laurent:
    """``C(n,j) * shift(C(m,k-j), j, n-j) * prod_i W(i+j, n-j)``."""
    left = wbinom(n, j)
    if not left:
        return ZERO
    right = _shifted(m, k - j, j, n - j)
    if not right:
        return ZERO
    return left * right * _block(j, k - j, n - j)


def conv1_rhs(n: int, m: int, k: int) -> Laurent:
    if k < 0:
        raise ValueError("first convolution needs k >= 0")
    return sum_range(0, k, lambda j: conv_term(n, m, k, j), ZERO)


def conv2_rhs(n: int, m: int, k: int) -> Laurent:
    """Second convolution; the index runs from ``k - m`` to ``n``."""
    return sum_range(k - m, n, lambda j: conv_term(n, m, k, j), ZERO)


def conv1_check(n, m, k) -> IdentityReport:
    return IdentityReport.exact("conv1", (n, m, k), wbinom(n + m, k), conv1_rhs(n, m, k))


def conv2_check(n, m, k) -> IdentityReport:
    return IdentityReport.exact("conv2", (n, m, k), wbinom(n + m, k), conv2_rhs(n, m, k))


def matrix_f(m: int, n: int, k: int) -> Laurent:
    """Lower-triangular matrix entry; its inverse is :func:`matrix_g`."""
    if k > n:
        return ZERO
    height = -m - k - 1
    return _shifted(m + n, n - k, k, height) * _block(k, n - k, height)


def matrix_g(m: int, k: int, l: int) -> Laurent:
    if l > k:
        return ZERO
    return _shifted(-m - l - 1, k - l, l, 0)


def inversion_check(m: int, n: int, l: int) -> IdentityReport:
    total = ZERO
    for k in range(l, n + 1):
        total = total + matrix_f(m, n, k) * matrix_g(m, k, l)
    return IdentityReport.exact("inversion", (m, n, l), total, Laurent(int(n == l)))
