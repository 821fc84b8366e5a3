"""Words in ``x, y`` and their inverses, normal forms and expansions of ``(x + y)**n``.

The algebra has ``y x = w(1,1) x y``, ``x w(s,t) = w(s+1,t) x`` and
``y w(s,t) = w(s,t+1) y``.  Normal forms are ``coeff * x**a * y**b`` with the
weight polynomial on the left.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .laurent import Laurent
from .weights import ONE, ZERO, Transform, apply_transform, big_weight, shift, signed_range, w

# a letter is (axis, exponent) with axis "x" or "y" and exponent +-1
_TOKEN = re.compile(r"\s*([xyXY])(\^-1|⁻¹|\^\{-1\})?\s*")


def parse_word(text: str) -> list:
    """``"y x^-1 Y"`` -> letters; an upper-case letter is the inverse."""
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad word at {text[pos:]!r}")
        c, inv = m.groups()
        e = -1 if (inv or c.isupper()) else 1
        out.append((c.lower(), e))
        pos = m.end()
    return out


def format_word(letters) -> str:
    return " ".join(a if e == 1 else f"{a}^-1" for a, e in letters)


# y^e x^f = weight * x^f y^e for e, f = +-1, read off the defining relations
_SWAP = {
    (1, 1): w(1, 1),
    (1, -1): w(0, 1).inverse(),
    (-1, 1): w(1, 0).inverse(),
    (-1, -1): w(0, 0),
}


@dataclass(frozen=True)
class NormalForm:
    coeff: Laurent
    x: int
    y: int

    def __str__(self):
        return f"({self.coeff}) x^{self.x} y^{self.y}"


def _redexes(letters) -> list:
    out = []
    for i in range(len(letters) - 1):
        (a, e), (b, f) = letters[i], letters[i + 1]
        if a == b and e == -f:
            out.append(i)
        elif a == "y" and b == "x":
            out.append(i)
    return out


def normalize(word, rng: random.Random | None = None) -> NormalForm:
    """Rewrite to normal form.

    By default the rightmost reducible pair is rewritten first; passing an
    ``rng`` picks a random reducible pair each time, which is how confluence
    is exercised.
    """
    letters = parse_word(word) if isinstance(word, str) else list(word)
    coeff = ONE
    while True:
        spots = _redexes(letters)
        if not spots:
            break
        i = rng.choice(spots) if rng else spots[-1]
        (a, e), (b, f) = letters[i], letters[i + 1]
        if a == b:
            del letters[i:i + 2]
            continue
        # the emitted weight sits after letters[:i]; pull it to the front
        px = sum(e2 for a2, e2 in letters[:i] if a2 == "x")
        py = sum(e2 for a2, e2 in letters[:i] if a2 == "y")
        coeff = coeff * shift(_SWAP[(e, f)], px, py)
        letters[i], letters[i + 1] = letters[i + 1], letters[i]
    x = sum(e for a, e in letters if a == "x")
    y = sum(e for a, e in letters if a == "y")
    return NormalForm(coeff, x, y)


def commute_powers(k: int, l: int) -> Laurent:
    """Weight ``c`` with ``y**k x**l = c x**l y**k``."""
    out = ONE
    for i, e in signed_range(1, l):
        out = out * big_weight(i, k) ** e
    return out


@dataclass(frozen=True)
class XSeries:
    """Truncated series ``sum_k coeffs[k] x**k y**(n-k)`` for ``0 <= k <= K``."""

    n: int
    coeffs: tuple

    @property
    def K(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def monomial(cls, n: int, k: int, K: int, coeff=ONE) -> XSeries:
        c = [ZERO] * (K + 1)
        if k <= K:
            c[k] = coeff
        return cls(n, tuple(c))

    def __add__(self, other: XSeries) -> XSeries:
        if self.n != other.n:
            raise ValueError("series of different total degree")
        K = min(self.K, other.K)
        return XSeries(self.n, tuple(self.coeffs[i] + other.coeffs[i] for i in range(K + 1)))

    def scale(self, c: int) -> XSeries:
        return XSeries(self.n, tuple(c * a for a in self.coeffs))

    def __mul__(self, other: XSeries) -> XSeries:
        K = min(self.K, other.K)
        out = [ZERO] * (K + 1)
        for k1 in range(K + 1):
            a = self.coeffs[k1]
            if not a:
                continue
            yk = self.n - k1
            for k2 in range(K + 1 - k1):
                b = other.coeffs[k2]
                if not b:
                    continue
                cross = shift(commute_powers(yk, k2), k1, 0)
                out[k1 + k2] = out[k1 + k2] + a * shift(b, k1, yk) * cross
        return XSeries(self.n + other.n, tuple(out))

    def __pow__(self, e: int) -> XSeries:
        out = XSeries.monomial(0, 0, self.K)
        for _ in range(e):
            out = out * self
        return out


def _inverse_x_plus_y(K: int) -> XSeries:
    """``y^-1 (1 + x y^-1)^-1`` as a geometric series."""
    u = XSeries.monomial(0, 1, K)
    geometric = XSeries.monomial(0, 0, K)
    power = geometric
    for k in range(1, K + 1):
        power = power * u
        geometric = geometric + power.scale(-1 if k % 2 else 1)
    return XSeries.monomial(-1, 0, K) * geometric


def expand_pow(n: int, K: int) -> XSeries:
    """``(x + y)**n`` expanded in non-negative powers of ``x``, through ``x**K``."""
    if K < 0:
        raise ValueError(f"truncation must be non-negative, got {K}")
    if n >= 0:
        base = XSeries(1, tuple([ONE, ONE] + [ZERO] * (K - 1))) if K >= 1 else XSeries(1, (ONE,))
        return base ** n
    return _inverse_x_plus_y(K) ** (-n)


def expand_second(n: int, K: int) -> dict:
    """``(x + y)**n`` in non-positive powers of ``x``: ``{j: coeff of x**j y**(n-j)}``.

    Computed in the algebra with the roles of ``x`` and ``y`` swapped (whose
    weights are the hat transform) and then reordered back.
    """
    swapped = expand_pow(n, K)
    out = {}
    for k, c in enumerate(swapped.coeffs):
        out[n - k] = apply_transform(c, Transform.HAT) * commute_powers(k, n - k)
    return out
