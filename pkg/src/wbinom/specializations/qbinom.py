"""Constant weights: ``w = q`` gives q-binomials, ``w = 1`` gives ordinary binomials.

The recursions here are written against plain dict polynomials in ``q`` so
they can serve as an independent check on the formal engine.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from ..weights import SpecializationMap


class QLaurent:
    """Laurent polynomial in one variable ``q``; ``{exponent: coefficient}``."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        if isinstance(c, int):
            c = {0: c}
        self.c = {e: v for e, v in (c or {}).items() if v}

    @classmethod
    def q(cls, e=1):
        return cls({e: 1})

    def _lift(self, other):
        return other if isinstance(other, QLaurent) else QLaurent(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
        return QLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return QLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.c) != 1 or abs(next(iter(self.c.values()))) != 1:
                raise ZeroDivisionError(f"{self} is not a unit")
            (e, v), = self.c.items()
            return QLaurent({e * n: v if n % 2 else 1})
        out = QLaurent(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, QLaurent)):
            return self.c == self._lift(other).c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __call__(self, q):
        return sum(v * q ** e for e, v in self.c.items())

    def __str__(self):
        if not self.c:
            return "0"
        out = ""
        for e in sorted(self.c):
            v = self.c[e]
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                body = str(abs(v))
            else:
                body = mono if abs(v) == 1 else f"{abs(v)}{mono}"
            sign = "-" if v < 0 else ("+" if out else "")
            out += sign + body
        return out

    __repr__ = __str__


def q_weights() -> SpecializationMap:
    return SpecializationMap("q", lambda s, t: QLaurent.q(), QLaurent(1), QLaurent(0))


def unit_weights() -> SpecializationMap:
    # Fraction keeps 1**-1 exact; substitute() hands back plain ints
    return SpecializationMap("one", lambda s, t: Fraction(1), Fraction(1), Fraction(0))


@lru_cache(maxsize=None)
def qbinom_oracle(n: int, k: int) -> QLaurent:
    """q-binomial from ``C(n+1,k) = C(n,k) + q**(n+1-k) C(n,k-1)`` on all of Z^2."""
    if k == 0 or k == n:
        return QLaurent(1)
    if 0 < k < n:
        return qbinom_oracle(n - 1, k) + QLaurent.q(n - k) * qbinom_oracle(n - 1, k - 1)
    if n < 0 < k:
        return qbinom_oracle(n + 1, k) - QLaurent.q(n + 1 - k) * qbinom_oracle(n, k - 1)
    if k < n < 0:
        # solve C(n+1,k+1) = C(n,k+1) + q**(n-k) C(n,k) for C(n,k)
        return (qbinom_oracle(n + 1, k + 1) - qbinom_oracle(n, k + 1)) * QLaurent.q(k - n)
    return QLaurent(0)


def binom_oracle(n: int, k: int) -> int:
    """Integer binomial on Z^2 from closed forms in the three live regions."""
    if 0 <= k <= n:
        return comb(n, k)
    if n < 0 <= k:
        return (-1) ** k * comb(k - n - 1, k)
    if k <= n < 0:
        return (-1) ** (n - k) * comb(-k - 1, -n - 1)
    return 0
