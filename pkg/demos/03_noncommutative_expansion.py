"""
Expanding (x + y)^n when yx = w(1,1) xy
=======================================

The coefficients of the expansion are the weighted binomials, for negative
exponents too.
"""

from wbinom import expand_pow, expand_second, normalize, wbinom

# normal ordering of a word: all x to the left
nf = normalize("y^-1 x y^-1 y^-1 x y^-1")
print(nf)

series = expand_pow(-2, 4)
for k, c in enumerate(series.coeffs):
    print(f"x^{k} y^{-2 - k}:", c, "  matches:", c == wbinom(-2, k))

###############################################################################
# The other expansion uses non-positive powers of x

for k, c in sorted(expand_second(-2, 3).items(), reverse=True):
    print(k, c)
