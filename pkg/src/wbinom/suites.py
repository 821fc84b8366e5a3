"""Named batches of identity checks, shared by the CLI and the acceptance tests."""

from __future__ import annotations

import numpy as np

from .core import parity_sign, reflect_breve_rhs, reflect_hat_rhs, reflect_tilde_rhs, region, sgn, wbinom, wbinom_regions
from .identities import IdentityReport, conv1_check, conv2_check, inversion_check
from .noncomm import expand_pow, expand_second
from .paths import (
    enumerate_pairs,
    enumerate_paths,
    in_fixed_set,
    iota,
    pair_weight,
    path_sum,
    path_to_subset,
    path_weight_area,
    path_weight_steps,
    subset_to_path,
    subset_weight,
    subsets_of,
)
from .specializations.elliptic import elliptic_checks, sample_params
from .specializations.qbinom import binom_oracle, q_weights, qbinom_oracle, unit_weights
from .specializations.stirling import stirling_checks
from .specializations.symmetric import symfun_checks
from .weights import ONE, ZERO, big_weight, prod_range, substitute

Range = tuple


def _span(r: Range):
    return range(r[0], r[1] + 1)


def pascal(n=(-6, 6), k=(-6, 6), **_):
    """Pascal rule, boundary values, vanishing regions, the ``n = -1`` row and the q/1 images."""
    out = []
    for a in _span(n):
        for b in _span(k):
            c = wbinom(a, b)
            if (a + 1, b) != (0, 0):
                out.append(IdentityReport.exact(
                    "pascal-rule", (a, b), wbinom(a + 1, b), c + wbinom(a, b - 1) * big_weight(b, a + 1 - b)))
            if b in (0, a):
                out.append(IdentityReport.exact("boundary", (a, b), c, ONE))
            # zero exactly in regions 4-6
            out.append(IdentityReport.exact("zero-pattern", (a, b), c == ZERO, region(a, b) > 3))
            out.append(IdentityReport.exact("q-image", (a, b), substitute(c, q_weights()), qbinom_oracle(a, b)))
            out.append(IdentityReport.exact("unit-image", (a, b), substitute(c, unit_weights()), binom_oracle(a, b)))
    for b in _span(k):
        closed = parity_sign(b) * sgn(b) * prod_range(1, b, lambda j: big_weight(j, -j), ONE)
        out.append(IdentityReport.exact("row-minus-one", (-1, b), wbinom(-1, b), closed))
    return out


def regions(n=(-6, 6), k=(-6, 6), **_):
    return [IdentityReport.exact("regions", (a, b), wbinom(a, b), wbinom_regions(a, b))
            for a in _span(n) for b in _span(k)]


def reflections(n=(-5, 5), k=(-5, 5), **_):
    out = []
    for a in _span(n):
        for b in _span(k):
            c = wbinom(a, b)
            out.append(IdentityReport.exact("reflection-hat", (a, b), c, reflect_hat_rhs(a, b)))
            out.append(IdentityReport.exact("reflection-tilde", (a, b), c, reflect_tilde_rhs(a, b)))
            out.append(IdentityReport.exact("reflection-breve", (a, b), c, reflect_breve_rhs(a, b)))
    return out


def hlp(n=(-6, 6), k=(-6, 6), **_):
    """Path sums, two path weightings, and the path/subset bijection."""
    out = []
    for a in _span(n):
        for b in _span(k):
            paths = enumerate_paths(b, a - b)
            out.append(IdentityReport.exact("path-sum", (a, b), path_sum(b, a - b), wbinom(a, b)))
            area_ok = all(path_weight_area(p) == path_weight_steps(p) for p in paths)
            out.append(IdentityReport.exact("area-weight", (a, b), area_ok, True))
            subsets = subsets_of(a, b)
            bij = (len(subsets) == len(paths)
                   and {subset_to_path(y) for y in subsets} == set(paths)
                   and all(path_to_subset(subset_to_path(y)) == y for y in subsets))
            out.append(IdentityReport.exact("subset-bijection", (a, b), bij, True))
            total = ZERO
            for y in subsets:
                total = total + subset_weight(y)
            out.append(IdentityReport.exact("subset-sum", (a, b), total, wbinom(a, b)))
    return out


def binomial_theorem(n=(-4, 4), truncation=6, **_):
    out = []
    for a in _span(n):
        series = expand_pow(a, truncation)
        for b, c in enumerate(series.coeffs):
            out.append(IdentityReport.exact("expansion-1", (a, b), c, wbinom(a, b)))
        for b, c in expand_second(a, truncation).items():
            out.append(IdentityReport.exact("expansion-2", (a, b), c, wbinom(a, b)))
    return out


def conv1(n=(-4, 4), m=(-4, 4), k=(0, 6), **_):
    return [conv1_check(a, b, c) for a in _span(n) for b in _span(m) for c in _span(k)]


def conv2(n=(-4, 4), m=(-4, 4), window=6, **_):
    return [conv2_check(a, b, c) for a in _span(n) for b in _span(m)
            for c in range(a + b - window, a + b + 1)]


def involution(n=(-4, 4), m=(-4, 4), k=(0, 6), **_):
    """On every ``m < 0 <= n`` instance: involutive, sign reversing, fixed set sums to the lhs."""
    out = []
    for a in _span(n):
        for b in _span(m):
            if not b < 0 <= a:
                continue
            for c in _span(k):
                ok_inv = ok_sign = ok_fixed = True
                fixed_sum = ZERO
                for pp in enumerate_pairs(a, b, c):
                    image = iota(pp)
                    ok_inv &= iota(image) == pp
                    if image == pp:
                        ok_fixed &= in_fixed_set(pp)
                        fixed_sum = fixed_sum + pair_weight(pp)
                    else:
                        ok_fixed &= not in_fixed_set(pp)
                        ok_sign &= pair_weight(image) == -pair_weight(pp)
                inst = (a, b, c)
                out.append(IdentityReport.exact("iota-involutive", inst, ok_inv, True))
                out.append(IdentityReport.exact("iota-sign-reversing", inst, ok_sign, True))
                out.append(IdentityReport.exact("iota-fixed-points", inst, ok_fixed, True))
                out.append(IdentityReport.exact("fixed-point-sum", inst, fixed_sum, wbinom(a + b, c)))
    return out


def inversion(n=(-3, 3), m=None, window=None, **_):
    """``sum_k f(n,k) g(k,l) = [n == l]``; ``window`` (a range) overrides the ``n, l`` grid."""
    m_values = (-2, 0, 2) if m is None else _span(m)
    if isinstance(window, tuple):
        n = window
    return [inversion_check(b, a, c) for b in m_values for a in _span(n) for c in _span(n)]


def symfun(n=(-4, 4), **_):
    return symfun_checks(ns=_span(n))


def stirling(**_):
    return stirling_checks()


def elliptic(seed=0, samples=3, tol=None, **_):
    rng = np.random.default_rng(seed)
    out = []
    for i in range(samples):
        params = sample_params(rng)
        for r in elliptic_checks(params, rng, tol):
            r.instance = (i,) + r.instance
            out.append(r)
    return out


SUITES = {
    "pascal": pascal,
    "regions": regions,
    "reflections": reflections,
    "hlp": hlp,
    "binomial-theorem": binomial_theorem,
    "conv1": conv1,
    "conv2": conv2,
    "involution": involution,
    "inversion": inversion,
    "symfun": symfun,
    "stirling": stirling,
    "elliptic": elliptic,
}


def run_suite(name: str, **options) -> dict:
    """``{suite name: [IdentityReport, ...]}``; ``"all"`` runs every suite.

    Exact suites ignore ``tol``; the elliptic suite uses it in place of its
    per-check tolerances.
    """
    names = list(SUITES) if name == "all" else [name]
    options = {k: v for k, v in options.items() if v is not None}
    out = {}
    for s in names:
        if s not in SUITES:
            raise KeyError(f"unknown suite {s!r}; choose from {', '.join(SUITES)} or all")
        out[s] = SUITES[s](**options)
    return out
