"""
Weighted binomials on the whole plane
=====================================

The coefficient C(n, k) is a Laurent polynomial in weights w(s, t).  This
walks through a few values and the six regions.
"""

from wbinom import wbinom, region, big_weight
from wbinom.weights import w

# the smallest non-trivial value
print("C(2,1)  =", wbinom(2, 1))
print("C(4,2)  =", wbinom(4, 2))

# negative n gives inverted weights
print("C(-1,2) =", wbinom(-1, 2))

###############################################################################
# Big weights are products along a column

print(big_weight(3, 2), "|", big_weight(2, -2))

###############################################################################
# A table of which region each (n, k) falls in; regions 4-6 are zero

for n in range(4, -5, -1):
    row = " ".join(str(region(n, k)) for k in range(-4, 5))
    print(f"n={n:>2}  {row}")

zeros = [(n, k) for n in range(-4, 5) for k in range(-4, 5) if not wbinom(n, k)]
print(len(zeros), "zero entries, all in regions", sorted({region(*z) for z in zeros}))

# pascal rule, checked by hand once
n, k = -3, 2
lhs = wbinom(n + 1, k)
rhs = wbinom(n, k) + wbinom(n, k - 1) * big_weight(k, n + 1 - k)
print("pascal rule at", (n, k), "holds:", lhs == rhs)
print("w(1,1) squared:", w(1, 1) ** 2)
