from fractions import Fraction

from hypothesis import strategies as st

from bernid.poly import BiPoly, UniPoly

rationals = st.builds(
    Fraction, st.integers(min_value=-50, max_value=50), st.integers(min_value=1, max_value=20)
)


def unipolys(max_degree=8, var="x"):
    return st.lists(rationals, max_size=max_degree + 1).map(lambda cs: UniPoly(cs, var))


def bipolys(max_degree=4):
    return st.lists(
        st.lists(rationals, min_size=max_degree + 1, max_size=max_degree + 1),
        max_size=max_degree + 1,
    ).map(BiPoly)
