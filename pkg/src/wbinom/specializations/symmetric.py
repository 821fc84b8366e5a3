"""Elementary and complete symmetric functions of hybrid sets.

A hybrid "new set" ``<f(l) | f(m)>`` is a list of ``(value, multiplicity)``
pairs with every multiplicity ``+1`` (forward range) or ``-1`` (backward).
Generating functions are ``prod (1 + v t)**mult`` and ``prod (1 - v t)**-mult``;
``k >= 0`` reads coefficients of the expansion in ``t``, while indices at
or below the cardinality (resp. at or below minus it) read the expansion in
``1/t``.  Values may live in any commutative ring; the ``1/t`` side needs
them to be invertible.
"""

from __future__ import annotations

from ..core import sgn, wbinom
from ..identities import IdentityReport
from ..laurent import Laurent
from ..weights import SpecializationMap, prod_range, signed_range, substitute, sum_range


def a(i: int) -> Laurent:
    return Laurent.var(("a", i))


def new_set(lo: int, hi: int, f=a) -> list:
    return [(f(i), e) for i, e in signed_range(lo, hi)]


def _truncated_product(factors, degree: int):
    out = [1] + [0] * degree
    for f in factors:
        nxt = [0] * (degree + 1)
        for i, x in enumerate(out):
            if not x:
                continue
            for j in range(min(len(f), degree + 1 - i)):
                nxt[i + j] = nxt[i + j] + x * f[j]
        out = nxt
    return out[degree]


def elementary(items, k: int):
    """``e_k`` of a hybrid set given as ``(value, mult)`` pairs."""
    size = sum(e for _, e in items)
    if k >= 0:
        factors = [[1, v] if e > 0 else [(-v) ** d for d in range(k + 1)] for v, e in items]
        return _truncated_product(factors, k)
    if k <= size:
        # 1 + v t = t (v + 1/t);  (1 + v t)^-1 = (1/t) v^-1 (1 + v^-1/t)^-1
        d_max = size - k
        factors = []
        for v, e in items:
            if e > 0:
                factors.append([v, 1])
            else:
                vi = v ** -1
                factors.append([(-1) ** d * vi ** (d + 1) for d in range(d_max + 1)])
        return _truncated_product(factors, d_max)
    return 0


def complete(items, k: int):
    """``h_k`` of a hybrid set given as ``(value, mult)`` pairs."""
    size = sum(e for _, e in items)
    if k >= 0:
        factors = [[v ** d for d in range(k + 1)] if e > 0 else [1, -v] for v, e in items]
        return _truncated_product(factors, k)
    if k <= -size:
        # (1 - v t)^-1 = -(1/t) v^-1 (1 - v^-1/t)^-1;  1 - v t = t (1/t - v)
        d_max = -size - k
        factors = []
        for v, e in items:
            if e > 0:
                vi = v ** -1
                factors.append([-(vi ** (d + 1)) for d in range(d_max + 1)])
            else:
                factors.append([-v, 1])
        return _truncated_product(factors, d_max)
    return 0


def e_sym(n: int, k: int):
    """``e_k(a_1, ..., a_n)`` with the hybrid reading of ``a_1..a_n`` for ``n < 0``."""
    return elementary(new_set(1, n), k)


def h_sym(n: int, k: int):
    return complete(new_set(1, n), k)


def e_weights() -> SpecializationMap:
    """``w(s,t) = a_{s+t} / a_{s+t-1}``: binomials become elementary functions."""
    return SpecializationMap("e", lambda s, t: a(s + t) * a(s + t - 1) ** -1, Laurent(1), Laurent(0))


def h_weights() -> SpecializationMap:
    """``w(s,t) = a_{t+1} / a_t``: binomials become complete functions."""
    return SpecializationMap("h", lambda s, t: a(t + 1) * a(t) ** -1, Laurent(1), Laurent(0))


def _neg_a(i):
    return -a(i)


def _inv_a(i):
    return a(i) ** -1


def _prod_a(n, e=1):
    return prod_range(1, n, lambda i: a(i) ** e, Laurent(1))


def symfun_checks(ns=range(-4, 5), ks=range(-8, 9), conv_ks=range(0, 7), window=6):
    """Bridges to the binomials, dualities, convolutions and orthogonality."""
    out = []
    add = out.append
    e_map, h_map = e_weights(), h_weights()
    for n in ns:
        for k in ks:
            add(IdentityReport.exact("e-h-duality", (n, k), e_sym(n, k),
                                     complete(new_set(n + 1, 0, _neg_a), k)))
            add(IdentityReport.exact("e-inverse-duality", (n, k), e_sym(n, k),
                                     elementary(new_set(1, n, _inv_a), n - k) * _prod_a(n)))
            add(IdentityReport.exact("h-inverse-duality", (n, k), h_sym(n, k),
                                     complete(new_set(1, n, _inv_a), -n - k)
                                     * (-1) ** (n % 2) * _prod_a(n, -1)))
        for k in range(-6, 7):
            c = wbinom(n, k)
            add(IdentityReport.exact("e-bridge", (n, k), substitute(c, e_map),
                                     e_sym(n, k) * _prod_a(k, -1)))
            add(IdentityReport.exact("h-bridge", (n, k), substitute(c, h_map),
                                     sgn(k) * h_sym(n - k + 1, k) * a(1) ** -k))
        for k in conv_ks:
            alt = sum_range(0, k, lambda j: (-1) ** j * e_sym(n, j) * h_sym(n, k - j))
            add(IdentityReport.exact("orthogonality", (n, k), alt, int(k == 0)))
    for n in ns:
        for m in ns:
            def e_term(k, j):
                return e_sym(n, j) * elementary(new_set(n + 1, n + m), k - j)

            def h_term(k, j):
                top = n + m - k + 1
                return complete(new_set(1, n - j + 1), j) * complete(new_set(n - j + 1, top), k - j)

            for k in conv_ks:
                add(IdentityReport.exact("e-conv1", (n, m, k), e_sym(n + m, k),
                                         sum_range(0, k, lambda j: e_term(k, j))))
                add(IdentityReport.exact("h-conv1", (n, m, k), h_sym(n + m - k + 1, k),
                                         sum_range(0, k, lambda j: h_term(k, j))))
                mixed = sum_range(0, k, lambda j: e_sym(n, j) * complete(
                    new_set(n + m + 1, n, _neg_a), k - j))
                add(IdentityReport.exact("e-h-mixed", (n, m, k), e_sym(n + m, k), mixed))
            for k in range(n + m - window, n + m + 1):
                add(IdentityReport.exact("e-conv2", (n, m, k), e_sym(n + m, k),
                                         sum_range(k - m, n, lambda j: e_term(k, j))))
                add(IdentityReport.exact(
                    "h-conv2", (n, m, k), sgn(k) * h_sym(n + m - k + 1, k),
                    sum_range(k - m, n, lambda j: sgn(j) * sgn(k - j) * h_term(k, j))))
    return out
