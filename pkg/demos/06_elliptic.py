"""
Elliptic weights
================

Numerical checks with theta functions at a randomly drawn parameter set.
"""

import numpy as np

from wbinom.specializations.elliptic import ell_binom, ell_recursive, elliptic_checks, sample_params

rng = np.random.default_rng(3)
params = sample_params(rng)
print(params)

rec = ell_recursive(params)
for n, k in [(3, 1), (-2, 2), (-2, -4)]:
    print((n, k), ell_binom(params, n, k), abs(rec(n, k) - ell_binom(params, n, k)))

reports = elliptic_checks(params, rng)
worst = {}
for r in reports:
    worst[r.name] = max(worst.get(r.name, 0.0), r.residual)
for name, res in worst.items():
    print(f"{name:<22} {res:.1e}")
print("all passed:", all(r.passed for r in reports))
