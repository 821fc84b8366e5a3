"""Sparse Laurent polynomials with integer coefficients.

Variables are arbitrary hashable labels, by convention tuples such as
``("w", s, t)`` or ``("a", i)``.  A monomial is stored as one Python int in
which every variable owns a fixed-width bit field holding its (signed)
exponent.  Multiplying monomials is then plain integer addition, which keeps
the inner loop of polynomial multiplication cheap.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from numbers import Integral

_BITS = 24
_MASK = (1 << _BITS) - 1
_HALF = 1 << (_BITS - 1)

_labels: list = []
_index: dict = {}
_lock = threading.Lock()


class NonInvertibleError(ArithmeticError):
    """Raised when inverting something that is not a unit."""


def _var(label) -> int:
    idx = _index.get(label)
    if idx is None:
        with _lock:
            idx = _index.get(label)
            if idx is None:
                idx = len(_labels)
                _labels.append(label)
                _index[label] = idx
    return idx


def _encode(factors) -> int:
    key = 0
    for label, e in factors:
        if e:
            key += e << (_BITS * _var(label))
    return key


@lru_cache(maxsize=1 << 17)
def _decode(key: int) -> tuple:
    """Split a packed monomial into ``((label, exp), ...)`` sorted by label."""
    out = []
    while key:
        low = (key & -key).bit_length() - 1
        shift = low - low % _BITS
        d = (key >> shift) & _MASK
        if d >= _HALF:
            d -= 1 << _BITS
        if not -_HALF < d < _HALF:
            raise OverflowError("exponent out of range")
        out.append((_labels[shift // _BITS], d))
        key -= d << shift
    out.sort(key=lambda f: f[0])
    return tuple(out)


def _fmt_label(label) -> str:
    if isinstance(label, tuple) and label and isinstance(label[0], str):
        return f"{label[0]}({','.join(str(i) for i in label[1:])})"
    return str(label)


class Laurent:
    """Immutable Laurent polynomial; ``{packed monomial: int coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Laurent):
            self._terms = value._terms
        elif isinstance(value, Integral):
            self._terms = {0: int(value)} if value else {}
        elif isinstance(value, dict):
            self._terms = {k: c for k, c in value.items() if c}
        else:
            raise TypeError(f"cannot build Laurent from {type(value).__name__}")
        self._hash = None

    # construction
    @classmethod
    def monomial(cls, factors, coeff=1) -> Laurent:
        """``coeff * prod(label**exp for label, exp in factors)``."""
        return cls({_encode(factors): coeff})

    @classmethod
    def var(cls, label) -> Laurent:
        return cls({_encode([(label, 1)]): 1})

    # inspection
    def terms(self):
        """Yield ``(factors, coeff)`` with factors as sorted ``(label, exp)`` tuples."""
        for key, c in self._terms.items():
            yield _decode(key), c

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    def constant(self) -> int:
        return self._terms.get(0, 0)

    def variables(self) -> set:
        return {label for factors, _ in self.terms() for label, _ in factors}

    def coeff(self, factors) -> int:
        return self._terms.get(_encode(factors), 0)

    # arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, Laurent):
            return other
        if isinstance(other, Integral):
            return Laurent(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Integral):
            return Laurent({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, Laurent):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Laurent(out)

    __rmul__ = __mul__

    def inverse(self) -> Laurent:
        if not self.is_unit():
            raise NonInvertibleError(f"{self} is not a unit")
        (k, c), = self._terms.items()
        return Laurent({-k: c})

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** -e
        if self.is_monomial():
            (k, c), = self._terms.items()
            return Laurent({k * e: c ** e})
        out, base = Laurent(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # variable maps
    def map_vars(self, image) -> Laurent:
        """Replace every variable by a monomial.

        ``image(label)`` returns an iterable of ``(label, exp)`` pairs; the
        variable ``label**e`` becomes ``prod(new**(e*exp))``.
        """
        cache: dict = {}
        out: dict = {}
        for key, c in self._terms.items():
            new = 0
            for label, e in _decode(key):
                img = cache.get(label)
                if img is None:
                    img = cache[label] = _encode(image(label))
                new += e * img
            out[new] = out.get(new, 0) + c
        return Laurent(out)

    def evaluate(self, assign, one=1, zero=0):
        """Evaluate in another commutative ring; ``assign(label)`` gives the value."""
        cache: dict = {}
        total = zero
        for factors, c in self.terms():
            value = one
            for label, e in factors:
                v = cache.get(label)
                if v is None:
                    v = cache[label] = assign(label)
                value = value * v ** e
            total = total + c * value
        return total

    # display
    def sort_key(self):
        return sorted((tuple(f), c) for f, c in self.terms())

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for factors, c in sorted(self.terms()):
            mono = "*".join(
                _fmt_label(l) + (f"^{e}" if e != 1 else "") for l, e in factors
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Laurent({self})"
