"""
Convolutions, an involution, and a matrix inverse
=================================================
"""

from wbinom import enumerate_pairs, iota
from wbinom.identities import conv1_check, conv2_check, inversion_check
from wbinom.paths import pair_weight

r = conv1_check(-2, 3, 2)
print(r.name, r.instance, r.passed)
print(" lhs:", r.lhs)

checks = [conv2_check(n, m, n + m - d) for n in range(-3, 4) for m in range(-3, 4) for d in range(4)]
print("second convolution:", sum(c.passed for c in checks), "of", len(checks))

###############################################################################
# The involution pairs off path pairs of opposite sign

pairs = enumerate_pairs(3, -1, 2)
fixed = [pp for pp in pairs if iota(pp) == pp]
print(len(pairs), "pairs,", len(fixed), "fixed")
moved = next(pp for pp in pairs if iota(pp) != pp)
print(moved.first, "|", moved.second, "->", iota(moved).first, "|", iota(moved).second)
print(pair_weight(moved), "vs", pair_weight(iota(moved)))

###############################################################################
# Lower triangular matrices that invert each other

grid = [inversion_check(0, n, l) for n in range(-3, 4) for l in range(-3, 4)]
print("inversion:", all(r.passed for r in grid))
