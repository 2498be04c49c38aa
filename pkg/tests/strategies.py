"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from structypes.finset import IntegralSet
from structypes.intspecies import IntSpecies
from structypes.series import TruncatedSeries
from structypes.species import Cycle, Deriv, LinOrder, One, Prod, ScalarMul, Sum, Zero, ZPow, from_multiplicities

primitives = st.one_of(
    st.just(Zero()),
    st.just(One()),
    st.integers(0, 4).map(ZPow),
    st.integers(0, 4).map(Cycle),
    st.just(LinOrder()),
)


def species(max_leaves=6, deriv=False):
    def extend(children):
        branches = [
            st.tuples(children, children).map(lambda p: Sum(*p)),
            st.tuples(children, children).map(lambda p: Prod(*p)),
            st.tuples(st.integers(0, 3), children).map(lambda p: ScalarMul(*p)),
        ]
        if deriv:
            branches.append(children.map(Deriv))
        return st.one_of(*branches)

    return st.recursive(primitives, extend, max_leaves=max_leaves)


def regular_parts():
    return st.lists(st.integers(0, 3), min_size=1, max_size=6).map(from_multiplicities)


regular_int_species = st.tuples(regular_parts(), regular_parts()).map(lambda p: IntSpecies(*p))

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series(order=8):
    return st.lists(small_rationals, min_size=order, max_size=order).map(TruncatedSeries)


def integral_sets(prefix):
    return st.tuples(st.integers(0, 4), st.integers(0, 4)).map(
        lambda p: IntegralSet([f"{prefix}{i}" for i in range(p[0])], [f"{prefix}'{i}" for i in range(p[1])])
    )
