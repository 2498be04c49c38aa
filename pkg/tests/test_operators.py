import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import regular_int_species, species
from structypes.chern import integral_skeletal
from structypes.errors import NonFreeAction, NotRegular
from structypes.finset import LabeledSet
from structypes.generators import random_regular_int_species, random_species
from structypes.intspecies import IntSpecies, iegf
from structypes.operators import (
    MZ,
    D,
    I,
    IntOperator,
    X,
    apply,
    apply_mixed,
    commutator,
    dcycle_bijection,
    dzpow_bijection,
    iapply,
    sti_bijection,
    vop,
    xop,
)
from structypes.series import TruncatedSeries, eval_at, theta
from structypes.species import (
    EMPTY_SYSTEM,
    Cycle,
    DegreePart,
    Deriv,
    Inl,
    L,
    One,
    Prod,
    ScalarMul,
    Sum,
    Z,
    Zero,
    ZPow,
    count,
    counts,
    egf,
    enumerate_structures,
)


def test_derivative_examples():
    assert count(apply(D, ZPow(3)), n=2) == 6 == count(ScalarMul(3, ZPow(2)), n=2)
    assert counts(apply(D, Cycle(4)), terms=6) == counts(ZPow(3), terms=6)
    assert counts(apply(D, One()), terms=5) == [0] * 5
    s = LabeledSet("ab")
    assert enumerate_structures(apply(D, Cycle(3)), EMPTY_SYSTEM, s) == enumerate_structures(Deriv(Cycle(3)), EMPTY_SYSTEM, s)


def test_explicit_derivative_bijections():
    m = dzpow_bijection(3, "ab")
    assert {k.sexpr: v.sexpr for k, v in m.items()}["(a ⋆ b)"] == "(copy 1 (a b))"
    m = dcycle_bijection(4, "abc")
    assert {k.sexpr: v.sexpr for k, v in m.items()}["[a ⋆ b c]"] == "(b c a)"
    for k in range(1, 6):
        s = LabeledSet.canonical(k - 1)
        assert len(dzpow_bijection(k, s)) == k * math.factorial(k - 1)
        assert len(dcycle_bijection(k, s)) == math.factorial(k - 1)


def test_operator_algebra():
    f = ZPow(2)
    assert counts(apply(D + MZ, f), terms=5) == counts(Sum(Deriv(f), Prod(Z, f)), terms=5)
    assert counts(apply(D * MZ, f), terms=6) == counts(Prod(Deriv(f), Prod(Z, f)), terms=6)
    assert counts(apply(D @ MZ, f), terms=5) == counts(Deriv(Prod(Z, f)), terms=5)
    assert apply(I, f) == f


def test_x_on_species():
    assert counts(apply(X, ZPow(4)), terms=6) == counts(ZPow(3), terms=6)
    assert counts(apply(X, L, up_to=6), terms=6) == counts(L, terms=6)
    with pytest.raises(NotRegular):
        apply(X, Cycle(3))


def test_xop_examples():
    reps = xop(ZPow(4), EMPTY_SYSTEM, "abc")
    assert len(reps) == 6 == count(ZPow(4), n=4) // 4
    assert len(xop(DegreePart(L, 4), EMPTY_SYSTEM, "abc")) == 6
    assert xop(Zero(), EMPTY_SYSTEM, "ab") == ()
    with pytest.raises(NotRegular):
        xop(Cycle(3), EMPTY_SYSTEM, "ab")


def test_xop_representatives_are_orbit_minima():
    for x in xop(ZPow(3), EMPTY_SYSTEM, "ab"):
        assert x.sexpr.startswith("(a")


def test_multiplicity_needs_free_orbits():
    from structypes.operators import _x_multiplicity

    with pytest.raises(NonFreeAction):
        _x_multiplicity(Cycle(3), EMPTY_SYSTEM, 3, structural=False)


def test_commutator_examples():
    assert commutator(D, D).pure
    assert not commutator(D, MZ).pure
    phi = apply_mixed(commutator(D, MZ), ZPow(2))
    assert iegf(phi, 5) == egf(ZPow(2), order=5) == TruncatedSeries([0, 0, 1, 0, 0])


def test_sti_examples():
    # both sides have 6 structures on a 2-set: (Z * Z^2) on 3 points is 3 * 2
    m = sti_bijection(ZPow(2), EMPTY_SYSTEM, "ab")
    assert len(m) == 6 == count(Sum(ZPow(2), Prod(Z, Deriv(ZPow(2)))), n=2)
    m = sti_bijection(One(), EMPTY_SYSTEM, "")
    assert len(m) == 1 and all(isinstance(y, Inl) for y in m.values())
    assert len(sti_bijection(L, EMPTY_SYSTEM, "abc")) == 24


def test_sti_on_random_species():
    rng = random.Random(11)
    for _ in range(20):
        f = random_species(rng, 3, deriv=True)
        for n in range(5):
            sti_bijection(f, EMPTY_SYSTEM, LabeledSet.canonical(n))


def test_iapply_examples():
    phi = IntSpecies(ZPow(3), Cycle(3))
    out = iapply(D, phi)
    assert (out.positive, out.negative) == (Deriv(ZPow(3)), Deriv(Cycle(3)))
    assert iapply(I, phi) == phi
    mixed = iapply(IntOperator(D, I), IntSpecies(ZPow(2), ZPow(2)))
    assert count(mixed.positive, n=1) - count(mixed.negative, n=1) == 2


def test_vop_examples():
    c3 = integral_skeletal(3)
    v = vop(c3)
    assert iegf(v, 5) == TruncatedSeries([0, 6, -4, 1, 0])
    assert iegf(vop(IntSpecies(Sum(One(), 3 * Z), Z)), 4) == TruncatedSeries.zero(4)
    vv = vop(v)
    assert iegf(vv, 4) == TruncatedSeries([0, 4, -1, 0])
    assert eval_at(iegf(vv, 4), 4) == 0
    with pytest.raises(NotRegular):
        vop(IntSpecies(Cycle(3), Zero()))


def test_vop_structural_mode_agrees():
    rng = random.Random(3)
    for _ in range(10):
        phi = random_regular_int_species(rng, 5, 2)
        assert vop(phi, 5, structural=True) == vop(phi, 5)


@settings(max_examples=60, deadline=None)
@given(regular_int_species)
def test_vop_decategorifies_to_theta(phi):
    assert iegf(vop(phi, 7), 7) == theta(iegf(phi, 8))


@settings(max_examples=60, deadline=None)
@given(species(4, deriv=True))
def test_derivative_is_formal_derivative(f):
    assert egf(apply(D, f), order=7) == egf(f, order=8).derivative()


@settings(max_examples=60, deadline=None)
@given(species(4), species(4))
def test_leibniz_rule(f, g):
    lhs = egf(Deriv(Prod(f, g)), order=7)
    rhs = egf(Sum(Prod(Deriv(f), g), Prod(f, Deriv(g))), order=7)
    assert lhs == rhs
    assert egf(Deriv(Sum(f, g)), order=7) == egf(Deriv(f), order=7) + egf(Deriv(g), order=7)


@settings(max_examples=60, deadline=None)
@given(species(4))
def test_commutator_acts_as_identity(f):
    assert iegf(apply_mixed(commutator(D, MZ), f), 8) == egf(f, order=8)


@given(st.integers(2, 6))
def test_x_lowers_zpow(n):
    assert len(xop(ZPow(n), EMPTY_SYSTEM, LabeledSet.canonical(n - 1))) == math.factorial(n - 1)
