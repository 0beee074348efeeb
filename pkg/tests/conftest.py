from fractions import Fraction

from hypothesis import strategies as st

from weylorder.algebra import OperatorExpr, Word
from weylorder.poly import MPoly

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def mpolys(max_deg=3, max_terms=4, variables=("N", "eps", "t")):
    exps = st.tuples(
        st.integers(0, max_deg) if "N" in variables else st.just(0),
        st.integers(0, max_deg) if "eps" in variables else st.just(0),
        st.integers(0, max_deg) if "t" in variables else st.just(0),
    )
    return st.dictionaries(exps, rationals, max_size=max_terms).map(MPoly)


eps_polys = mpolys(max_deg=2, max_terms=2, variables=("eps",))
words = st.lists(st.integers(0, 1), max_size=6).map(Word)
operator_exprs = st.dictionaries(words, eps_polys, max_size=4).map(OperatorExpr)
