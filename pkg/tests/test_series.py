from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import series, small_rationals
from structypes.errors import NonIntegerCoefficient, NotPolynomial, OrderTooSmall, ZeroConstantTerm
from structypes.series import ChernPolynomial, TruncatedSeries, add, eval_at, mul, reciprocal, theta


def ts(*coeffs, order=None):
    return TruncatedSeries(coeffs, order)


def test_add_examples():
    assert add(ts(1, 1, 0), ts(1, -1, 0)) == ts(2, 0, 0)
    f = ts(3, 0, 5)
    assert f + TruncatedSeries.zero(3) == f
    assert ts(1, 4, 6, 4, 1) + (-ts(1, -4, 6, -4, 1)) == ts(0, 8, 0, 8, 0)


def test_mul_examples():
    assert mul(ts(1, 1, 0), ts(1, 1, 0)) == ts(1, 2, 1)
    f = ts(2, 0, 7)
    assert f * TruncatedSeries.one(3) == f
    assert mul(ts(*[1] * 6), ts(1, -1, 0, 0, 0, 0)) == TruncatedSeries.one(6)


def test_mixed_orders_truncate():
    assert (ts(1, 2, 3) + ts(1, 1)).order == 2
    assert (ts(1, 2, 3) * ts(1, 1)).order == 2


def test_reciprocal_examples():
    assert reciprocal(ts(1, 4, 0, 0)) == ts(1, -4, 16, -64)
    assert reciprocal(ts(1)) == ts(1)
    assert reciprocal(ts(2)) == ts(Fraction(1, 2))
    with pytest.raises(ZeroConstantTerm):
        reciprocal(ts(0, 1))


def test_theta_examples():
    assert theta(ts(-1, 4, -6, 4, -1, 0)) == ts(0, 6, -4, 1, 0)
    assert theta(ts(5, 7, 0)) == ts(0, 0)
    assert theta(ts(0, 0, 1)) == ts(0, -1)
    with pytest.raises(OrderTooSmall):
        theta(ts(1))


def test_eval_at_examples():
    e3 = ts(0, 6, -4, 1, 0)
    assert eval_at(e3, 4) == 24
    assert eval_at(ts(7, 1, 2, 0), 0) == 7
    assert eval_at(ts(0, 3, -1, 0), 1) == 2
    with pytest.raises(NotPolynomial):
        eval_at(ts(1, 1), 2)


def test_text_form():
    assert str(ts(1, 0, Fraction(-1, 2), order=3)) == "1 - 1/2*z^2 + O(z^3)"
    assert str(ChernPolynomial(3, [0, 4, 0, 24])) == "0 + 4*H + 0*H^2 + 24*H^3"


def test_chern_polynomial_arithmetic():
    h = ChernPolynomial(3, [0, 1, 0, 0])
    one = ChernPolynomial(3, [1, 0, 0, 0])
    p = one + h
    assert (p * p * p * p).coeffs == (1, 4, 6, 4)  # H^4 vanishes
    assert (p - p).coeffs == (0, 0, 0, 0)
    with pytest.raises(NonIntegerCoefficient):
        ChernPolynomial.from_series(2, ts(1, Fraction(1, 2), 0))


@given(series(), series(), series())
def test_ring_laws(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert f * TruncatedSeries.one(8) == f
    assert f - f == TruncatedSeries.zero(8)


@given(st.lists(small_rationals, min_size=12, max_size=12))
def test_reciprocal_inverts(coeffs):
    f = TruncatedSeries(coeffs)
    if coeffs[0] == 0:
        with pytest.raises(ZeroConstantTerm):
            reciprocal(f)
    else:
        assert f * reciprocal(f) == TruncatedSeries.one(12)


@given(series(10))
def test_theta_undoes_by_multiplying_back(f):
    t = theta(f)
    minus_z = TruncatedSeries.monomial(1, 10, -1)
    back = minus_z * TruncatedSeries(list(t) + [0], 10) + ts(f[0], f[1], *[0] * 8)
    assert back.truncate(9) == f.truncate(9)


@given(series(6))
def test_derivative_is_linear_and_lowers_order(f):
    d = f.derivative()
    assert d.order == 5
    assert list(d) == [f[i + 1] * (i + 1) for i in range(5)]
