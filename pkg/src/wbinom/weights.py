"""Formal weights ``w(s,t)``, big weights, shifts and the three weight involutions.

Weight polynomials are :class:`~wbinom.laurent.Laurent` objects whose
variables are labelled ``("w", s, t)``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable

from .laurent import Laurent, NonInvertibleError

ONE = Laurent(1)
ZERO = Laurent(0)


def signed_range(lo: int, hi: int):
    """Index/exponent pairs for a product running from ``lo`` to ``hi``.

    A forward range yields ``(j, 1)`` for ``lo <= j <= hi``; ``hi == lo - 1`` is
    empty; a backward range yields ``(j, -1)`` for ``hi < j < lo``.  Every
    product and sum with possibly reversed bounds goes through here.
    """
    if hi >= lo:
        return [(j, 1) for j in range(lo, hi + 1)]
    return [(j, -1) for j in range(hi + 1, lo)]


def prod_range(lo: int, hi: int, factor: Callable[[int], Any], one=1):
    out = one
    for j, e in signed_range(lo, hi):
        out = out * factor(j) ** e
    return out


def sum_range(lo: int, hi: int, term: Callable[[int], Any], zero=0):
    """Sum with the same bound convention: a backward range is subtracted."""
    out = zero
    for j, e in signed_range(lo, hi):
        out = out + term(j) if e > 0 else out - term(j)
    return out


def w(s: int, t: int) -> Laurent:
    return Laurent.var(("w", s, t))


def big_weight(s: int, t: int) -> Laurent:
    """``w(s,1) w(s,2) ... w(s,t)``, inverted factors for negative ``t``."""
    return Laurent.monomial((("w", s, j), e) for j, e in signed_range(1, t))


def shift(p: Laurent, dx: int, dy: int) -> Laurent:
    """Ring automorphism ``w(s,t) -> w(s+dx, t+dy)``; other variables untouched."""
    if not dx and not dy:
        return p

    def image(label):
        if label[0] == "w":
            return [(("w", label[1] + dx, label[2] + dy), 1)]
        return [(label, 1)]

    return p.map_vars(image)


class Transform(Enum):
    """Involutions on the weight family; each sends ``w(s,t)`` to an inverted weight."""

    IDENTITY = "identity"
    HAT = "hat"  # w(t, s)^-1
    TILDE = "tilde"  # w(1-s-t, t)^-1
    BREVE = "breve"  # w(s, 1-s-t)^-1

    def image(self, s: int, t: int):
        if self is Transform.HAT:
            return (t, s), -1
        if self is Transform.TILDE:
            return (1 - s - t, t), -1
        if self is Transform.BREVE:
            return (s, 1 - s - t), -1
        return (s, t), 1


def apply_transform(p: Laurent, transform: Transform) -> Laurent:
    if transform is Transform.IDENTITY:
        return p

    def image(label):
        if label[0] != "w":
            return [(label, 1)]
        (s, t), e = transform.image(label[1], label[2])
        return [(("w", s, t), e)]

    return p.map_vars(image)


class SpecializationError(ValueError):
    """A substitution hit a weight whose image cannot be inverted."""


@dataclass(frozen=True)
class SpecializationMap:
    """Ring homomorphism out of the weight ring, given on generators."""

    name: str
    assign: Callable[[int, int], Any]
    one: Any = 1
    zero: Any = 0


def substitute(p: Laurent, spec: SpecializationMap):
    def value(label):
        if label[0] != "w":
            raise SpecializationError(f"{spec.name}: unexpected variable {label}")
        return spec.assign(label[1], label[2])

    try:
        out = p.evaluate(value, spec.one, spec.zero)
    except (ZeroDivisionError, NonInvertibleError) as exc:
        raise SpecializationError(f"{spec.name}: {exc}") from exc
    if isinstance(out, Fraction) and out.denominator == 1:
        return int(out)
    return out


def weight_factors(p: Laurent):
    """Terms as ``(coeff, [(s, t, exp), ...])``; raises if a non-weight variable appears."""
    out = []
    for factors, c in p.terms():
        fs = []
        for label, e in factors:
            if label[0] != "w":
                raise ValueError(f"not a weight variable: {label}")
            fs.append((label[1], label[2], e))
        out.append((c, sorted(fs)))
    out.sort(key=lambda r: (r[1], r[0]))
    return out


def to_records(p: Laurent) -> list:
    """Canonical JSON-ready form: ``[{"coeff": "3", "factors": [{"s", "t", "exp"}]}]``."""
    return [
        {"coeff": str(c), "factors": [{"s": s, "t": t, "exp": e} for s, t, e in fs]}
        for c, fs in weight_factors(p)
    ]


def from_records(records) -> Laurent:
    out = ZERO
    for r in records:
        fs = [(("w", f["s"], f["t"]), f["exp"]) for f in r["factors"]]
        out = out + Laurent.monomial(fs, int(r["coeff"]))
    return out


def dumps(p: Laurent) -> str:
    return json.dumps(to_records(p), separators=(",", ":"), sort_keys=True)


def loads(text: str) -> Laurent:
    return from_records(json.loads(text))
