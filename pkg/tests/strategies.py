"""
Estrategias de hypothesis compartidas por los tests de GenPerm.

Las funciones supermodulares se generan como combinaciones no negativas de
g_{S,t}(I) = max(0, |I ∩ S| - t) (supermodulares) más una parte modular
arbitraria.
"""

from hypothesis import strategies as st

from GenPerm.core import SetFunction, modular


def threshold(n: int, support: int, t: int) -> SetFunction:
    """max(0, |I ∩ S| - t) con S dada como máscara."""
    return SetFunction.from_callable(n, lambda I: max(0, bin(I & support).count("1") - t))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
coefficients = st.fractions(min_value=0, max_value=4, max_denominator=4)


@st.composite
def supermodular_functions(draw, n=None, min_n=2, max_n=4):
    """SetFunction supermodular (no necesariamente estándar)."""
    if n is None:
        n = draw(st.integers(min_value=min_n, max_value=max_n))
    f = modular(draw(st.lists(rationals, min_size=n, max_size=n)), draw(rationals))
    terms = draw(st.lists(
        st.tuples(st.integers(min_value=1, max_value=(1 << n) - 1),
                  st.integers(min_value=0, max_value=n - 1),
                  coefficients),
        min_size=1, max_size=4,
    ))
    for support, t, c in terms:
        f = f + threshold(n, support, t).scale(c)
    return f


@st.composite
def set_functions(draw, n=None, min_n=2, max_n=4):
    """SetFunction arbitraria con valores racionales."""
    if n is None:
        n = draw(st.integers(min_value=min_n, max_value=max_n))
    values = draw(st.lists(rationals, min_size=1 << n, max_size=1 << n))
    return SetFunction(n, tuple(values))
