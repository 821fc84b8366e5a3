"""Weighted binomial coefficients extended to all integers ``n`` and ``k``.

The weights ``w(s, t)`` are formal Laurent variables; specializations send
them to ``q``, to ``1``, to ratios of symmetric-function variables, or to
elliptic functions.
"""

from .core import (
    make_binomial,
    reflect_breve_rhs,
    reflect_hat_rhs,
    reflect_tilde_rhs,
    region,
    sgn,
    wbinom,
    wbinom_recursive,
    wbinom_regions,
    weighted_integer,
)
from .identities import IdentityReport, conv1_rhs, conv2_rhs, inversion_check, matrix_f, matrix_g
from .laurent import Laurent, NonInvertibleError
from .noncomm import NormalForm, XSeries, commute_powers, expand_pow, expand_second, normalize
from .paths import (
    HybridPath,
    HybridSubset,
    PathPair,
    Step,
    UnsupportedCaseError,
    enumerate_pairs,
    enumerate_paths,
    iota,
    path_sum,
    path_weight_area,
    path_weight_steps,
    subsets_of,
)
from .weights import (
    SpecializationError,
    SpecializationMap,
    Transform,
    apply_transform,
    big_weight,
    prod_range,
    shift,
    signed_range,
    substitute,
    sum_range,
    w,
)
