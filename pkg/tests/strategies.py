"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from wbinom import Laurent
from wbinom.weights import w

small = st.integers(-3, 3)


@st.composite
def weight_monomials(draw, max_factors=3):
    n = draw(st.integers(0, max_factors))
    out = Laurent(draw(st.integers(-4, 4).filter(bool)))
    for _ in range(n):
        out = out * w(draw(small), draw(small)) ** draw(st.integers(-2, 2))
    return out


@st.composite
def weight_polys(draw, max_terms=4):
    out = Laurent(0)
    for _ in range(draw(st.integers(0, max_terms))):
        out = out + draw(weight_monomials())
    return out
