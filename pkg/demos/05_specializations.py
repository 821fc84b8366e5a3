"""
From formal weights to numbers
==============================

Sending every weight to q gives q-binomials; to 1 gives ordinary
binomials.  Ratios of variables give symmetric functions, and weighted
integers give Stirling numbers.
"""

from wbinom import wbinom
from wbinom.specializations.qbinom import q_weights, unit_weights
from wbinom.specializations.stirling import first, second
from wbinom.specializations.symmetric import e_sym, e_weights
from wbinom.weights import substitute

for n in (4, -3):
    print(n, [str(substitute(wbinom(n, k), q_weights())) for k in range(4)])
    print(n, [substitute(wbinom(n, k), unit_weights()) for k in range(4)])

# e_2 of three variables, then the same thing reached through the weights
print(e_sym(3, 2))
print(substitute(wbinom(3, 2), e_weights()))

###############################################################################
# Stirling numbers, signed first kind and second kind

one = unit_weights()
for n in range(6):
    print([substitute(first(n, k), one) for k in range(n + 1)],
          [substitute(second(n, k), one) for k in range(n + 1)])

# duality with negative arguments
print(substitute(first(4, 2), one), substitute(second(-2, -4), one))
