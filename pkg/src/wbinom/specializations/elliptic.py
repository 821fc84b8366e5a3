"""Elliptic weights, theta functions and the closed-form elliptic binomial.

Every parameter is a complex number.  Theta products are truncated after
``J`` factors, with ``J`` the smallest integer such that ``|p|**J`` falls
below ``tolerance * 1e-3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from ..core import make_binomial, parity_sign, sgn, wbinom
from ..identities import IdentityReport
from ..weights import SpecializationMap, signed_range, substitute


class SingularParameterError(ZeroDivisionError):
    """A theta factor that must be divided by is numerically zero."""


def truncation(p: complex, tolerance: float) -> int:
    if abs(p) == 0:
        return 1
    return max(1, math.ceil(math.log(tolerance * 1e-3) / math.log(abs(p))) + 1)


def theta(x, p, J: int):
    """Modified Jacobi theta function ``prod_{j>=0} (1 - p^j x)(1 - p^{j+1}/x)``, truncated."""
    x = np.asarray(x, dtype=complex)
    if np.any(x == 0):
        raise ValueError("theta is undefined at x = 0")
    pj = np.asarray(p, dtype=complex) ** np.arange(J + 1)
    out = np.prod(1 - np.multiply.outer(x, pj[:J]), axis=-1)
    out = out * np.prod(1 - np.multiply.outer(1 / x, pj[1:J + 1]), axis=-1)
    return out[()] if out.ndim == 0 else out


@dataclass(frozen=True)
class EllipticParams:
    a: complex
    b: complex
    q: complex
    p: complex
    tolerance: float = 1e-13

    @property
    def J(self) -> int:
        return truncation(self.p, self.tolerance)

    def with_ab(self, a, b) -> EllipticParams:
        return replace(self, a=a, b=b)

    def mono(self, ea: int, eb: int, eq: int) -> complex:
        return self.a ** ea * self.b ** eb * self.q ** eq

    def th(self, *args) -> complex:
        """Product of theta values at ``a^ea b^eb q^eq`` for each ``(ea, eb, eq)``."""
        xs = [self.mono(*t) for t in args]
        return complex(np.prod(theta(xs, self.p, self.J)))

    def poch(self, x: complex, k: int) -> complex:
        """Theta shifted factorial ``prod_{i=0}^{k-1} theta(x q^i)``, reversed range inverted."""
        out = 1 + 0j
        for i, e in signed_range(0, k - 1):
            out *= complex(theta(x * self.q ** i, self.p, self.J)) ** e
        return out


def sample_params(rng: np.random.Generator, tolerance: float = 1e-13, guard: float = 1e-3,
                  span: int = 8) -> EllipticParams:
    """Generic parameters: ``|p|`` in [0.05, 0.2], ``a, b, q`` near the unit circle.

    Draws are rejected until every theta factor met by the checks on indices
    up to ``span`` stays above ``guard`` in modulus.
    """
    while True:
        def unit():
            return rng.uniform(0.95, 1.05) * np.exp(2j * np.pi * rng.uniform())

        p = rng.uniform(0.05, 0.2) * np.exp(2j * np.pi * rng.uniform())
        params = EllipticParams(complex(unit()), complex(unit()), complex(unit()), complex(p), tolerance)
        exps = [(ea, eb, eq) for ea in (-2, -1, 0, 1, 2) for eb in (-2, -1, 0, 1, 2)
                for eq in range(-3 * span, 3 * span + 1) if (ea, eb, eq) != (0, 0, 0)]
        vals = theta([params.mono(*e) for e in exps], params.p, params.J)
        if np.min(np.abs(vals)) > guard:
            return params


def ell_weight(params: EllipticParams, s: int, t: int) -> complex:
    num = params.th((1, 0, s + 2 * t), (0, 1, 2 * s + t - 2), (1, -1, t - s - 1))
    den = params.th((1, 0, s + 2 * t - 2), (0, 1, 2 * s + t), (1, -1, t - s + 1))
    return num / den * params.q


def ell_big_weight(params: EllipticParams, s: int, t: int) -> complex:
    num = params.th((1, 0, s + 2 * t), (0, 1, 2 * s), (0, 1, 2 * s - 1), (1, -1, 1 - s), (1, -1, -s))
    den = params.th((1, 0, s), (0, 1, 2 * s + t), (0, 1, 2 * s + t - 1), (1, -1, 1 + t - s), (1, -1, t - s))
    return num / den * params.q ** t


def elliptic_weights(params: EllipticParams) -> SpecializationMap:
    return SpecializationMap("elliptic", lambda s, t: ell_weight(params, s, t), 1 + 0j, 0j)


@lru_cache(maxsize=64)
def ell_recursive(params: EllipticParams):
    """Pascal recursion driven by the elliptic big weights (memoized per parameter set)."""
    return make_binomial(lambda s, t: ell_big_weight(params, s, t), 1 + 0j, 0j)


def ell_binom(params: EllipticParams, n: int, k: int) -> complex:
    """Closed form as a ratio of theta shifted factorials.

    Factors of the form ``theta(q^0) = 0`` appear for some ``(n, k)``; they are
    counted rather than evaluated, equal numbers of them in numerator and
    denominator cancel, and a surplus in the numerator gives zero.
    """
    length = n - k
    num = [(0, 0, 1 + k), (1, 0, 1 + k), (0, 1, 1 + k), (1, -1, 1 - k)]
    den = [(0, 0, 1), (1, 0, 1), (0, 1, 1 + 2 * k), (1, -1, 1)]
    value = 1 + 0j
    zeros = 0
    for bases, side in ((num, 1), (den, -1)):
        for ea, eb, eq in bases:
            for i, e in signed_range(0, length - 1):
                if (ea, eb, eq + i) == (0, 0, 0):
                    zeros += side * e
                    continue
                th = params.th((ea, eb, eq + i))
                if side * e < 0 and abs(th) < params.tolerance:
                    raise SingularParameterError(f"theta factor {abs(th):.1e} at ({n}, {k})")
                value *= th ** (side * e)
    if zeros > 0:
        return 0j
    if zeros < 0:
        raise ZeroDivisionError(f"closed form has a pole at ({n}, {k})")
    return value


# numerical checks

TOLERANCES = {
    "theta": 1e-10,
    "recursion": 1e-9,
    "reflection": 1e-8,
    "convolution": 1e-8,
    "frenkel-turaev": 1e-8,
    "ellipticity": 1e-9,
}


def rel_err(x: complex, y: complex, scale: float = 0.0) -> float:
    """``|x - y|`` relative to the largest of ``|x|``, ``|y|`` and ``scale``."""
    ref = max(abs(x), abs(y), scale)
    return 0.0 if ref == 0 else abs(x - y) / ref


def _report(name, instance, lhs, rhs, tol, scale=0.0):
    r = float(rel_err(lhs, rhs, scale))
    return IdentityReport(name, tuple(instance), complex(lhs), complex(rhs), r < tol, r)


def _prod_big(params, lo, hi, s_of, t_of):
    out = 1 + 0j
    for j, e in signed_range(lo, hi):
        out *= ell_big_weight(params, s_of(j), t_of(j)) ** e
    return out


def frenkel_turaev(params: EllipticParams, c: complex, d: complex, n: int):
    """Both sides of the terminating very-well-poised summation."""
    a, b, q, p, J = params.a, params.b, params.q, params.p, params.J

    def poch(xs, k):
        return np.prod([params.poch(x, k) for x in xs])

    e = a * a * q ** (n + 1) / (b * c * d)
    terms = []
    for k in range(n + 1):
        lead = complex(theta(a * q ** (2 * k), p, J) / theta(a, p, J))
        num = poch([a, b, c, d, e, q ** -n], k)
        den = poch([q, a * q / b, a * q / c, a * q / d, a * q / e, a * q ** (n + 1)], k)
        terms.append(lead * num / den * q ** k)
    rhs = poch([a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)], n) / poch(
        [a * q / b, a * q / c, a * q / d, a * q / (b * c * d)], n)
    return sum(terms), rhs, sum(abs(t) for t in terms)


def elliptic_checks(params: EllipticParams, rng: np.random.Generator, tol: float | None = None,
                    ns=range(-3, 5), conv_ns=range(-3, 4), conv_ks=range(0, 5), window=4):
    def t(kind):
        return TOLERANCES[kind] if tol is None else tol

    out = []
    add = out.append
    a, b, q, p = params.a, params.b, params.q, params.p
    J = params.J

    for i, x in enumerate([a, b, q, a / b, a * q ** 3, b / q ** 2] + list(rng.normal(size=4) + 1j * rng.normal(size=4))):
        x = complex(x)
        add(_report("theta-inversion", (i,), complex(theta(x, p, J)), -x * complex(theta(1 / x, p, J)), t("theta")))
        add(_report("theta-quasi-period", (i,), complex(theta(p * x, p, J)), -complex(theta(x, p, J)) / x, t("theta")))
    for i in range(4):
        x, y, z, u = (complex(v) for v in np.exp(rng.normal(size=4) * 0.3 + 2j * np.pi * rng.uniform(size=4)))
        th = lambda *vs: complex(np.prod(theta(list(vs), p, J)))
        lhs = th(x * y, x / y, u * z, u / z)
        first, second = th(u * y, u / y, x * z, x / z), x / z * th(z * y, z / y, u * x, u / x)
        add(_report("theta-three-term", (i,), lhs, first + second, t("theta"), abs(first) + abs(second)))

    rec = ell_recursive(params)
    spec = elliptic_weights(params)
    for s in ns:
        for tt in ns:
            small = 1 + 0j
            for j, e in signed_range(1, tt):
                small *= ell_weight(params, s, j) ** e
            add(_report("big-weight", (s, tt), ell_big_weight(params, s, tt), small, t("recursion")))
    for n in ns:
        for k in ns:
            closed = ell_binom(params, n, k)
            add(_report("recursion-vs-closed", (n, k), rec(n, k), closed, t("recursion")))
            add(_report("formal-vs-closed", (n, k), substitute(wbinom(n, k), spec), closed, t("recursion")))
            swapped = ell_binom(params.with_ab(b, a), n, n - k) * _prod_big(params, 1, k, lambda j: j, lambda j: n - k)
            add(_report("reflection-swap", (n, k), closed, swapped, t("reflection")))
            tail = _prod_big(params, 1, n - k, lambda j: n + 1 - j, lambda j: j)
            tilde = ell_binom(params.with_ab(a / b, 1 / b), -k - 1, -n - 1) / tail
            add(_report("reflection-tilde", (n, k), closed, parity_sign(n - k) * sgn(n - k) * tilde, t("reflection")))
            breve = ell_binom(params.with_ab(1 / a, b / a), k - n - 1, k) * _prod_big(params, 1, k, lambda j: j, lambda j: -j)
            add(_report("reflection-breve", (n, k), closed, parity_sign(k) * sgn(k) * breve, t("reflection")))
            moved = ell_binom(params.with_ab(a * p, b * p), n, k)
            add(_report("ellipticity-binomial", (n, k), closed, moved, t("ellipticity")))
        moved_w = ell_weight(params.with_ab(a * p, b * p), n, n + 1)
        add(_report("ellipticity-weight", (n,), ell_weight(params, n, n + 1), moved_w, t("ellipticity")))

    def conv_term(n, m, k, j):
        shifted = params.with_ab(a * q ** (2 * n - j), b * q ** (n + j))
        return (ell_binom(params, n, j) * ell_binom(shifted, m, k - j)
                * _prod_big(params, 1, k - j, lambda i: i + j, lambda i: n - j))

    for n in conv_ns:
        for m in conv_ns:
            for name, ks, lo in (("convolution-1", conv_ks, lambda k: 0),
                                 ("convolution-2", range(n + m - window, n + m + 1), lambda k: k - m)):
                for k in ks:
                    hi = k if name == "convolution-1" else n
                    terms = [e * conv_term(n, m, k, j) for j, e in signed_range(lo(k), hi)]
                    lhs = ell_binom(params, n + m, k)
                    add(_report(name, (n, m, k), lhs, sum(terms), t("convolution"), sum(abs(x) for x in terms)))

    for n in range(0, 5):
        c, d = (complex(v) for v in np.exp(rng.normal(size=2) * 0.05 + 2j * np.pi * rng.uniform(size=2)))
        lhs, rhs, scale = frenkel_turaev(params, c, d, n)
        add(_report("frenkel-turaev", (n,), lhs, rhs, t("frenkel-turaev"), scale))
    return out
