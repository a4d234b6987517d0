from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from qcurv.errors import ConstantTermNotOne, HalfPowerViolation, NonUnitConstantTerm, OrderMismatch
from qcurv.series import (
    Series,
    half_power_check,
    log_derivative,
    series_inv,
    series_mul,
    series_pow_minus_half,
    series_sqrt,
)

from conftest import small

unit_series = st.lists(small, min_size=4, max_size=4).map(lambda cs: Series([F(1)] + cs))

MODEL_V = Series([1, -2, F(7, 4), F(-7, 8), F(35, 128)])


def test_model_sqrt():
    assert list(series_sqrt(MODEL_V)) == [1, -1, F(3, 8), F(-1, 16), F(1, 256)]


def test_model_inverse_root():
    assert list(series_pow_minus_half(MODEL_V)) == [1, 1, F(5, 8), F(5, 16), F(35, 256)]


def test_mul_order_mismatch():
    with pytest.raises(OrderMismatch):
        series_mul(Series([1, 2]), Series([1, 2, 3]))


def test_inverse_needs_unit():
    with pytest.raises(NonUnitConstantTerm):
        series_inv(Series([0, 1, 1]))


def test_sqrt_needs_one():
    with pytest.raises(ConstantTermNotOne):
        series_sqrt(Series([4, 1]))


@given(unit_series)
def test_sqrt_squares_back(v):
    w = series_sqrt(v)
    assert series_mul(w, w) == v


@given(unit_series)
def test_inverse_involution(v):
    assert series_inv(series_inv(v)) == v
    assert series_mul(v, series_inv(v)) == Series([1, 0, 0, 0, 0])


@given(unit_series)
def test_inverse_root(v):
    psi = series_pow_minus_half(v)
    assert series_mul(series_mul(psi, psi), v) == Series([1, 0, 0, 0, 0])


@given(unit_series)
def test_half_power_closed_forms(v):
    h = half_power_check(list(v))
    assert h.w == tuple(series_sqrt(v))


def test_half_power_needs_unit_constant():
    with pytest.raises(ConstantTermNotOne):
        half_power_check(Series([2, 1, 0, 0, 0]))
    assert issubclass(HalfPowerViolation, AssertionError)


def test_log_derivative_volume():
    # (1 - ct)^n: (log v)' = -nc / (1 - ct)
    n, c = 8, F(1, 4)
    v = Series([F(1), -n * c, 28 * c ** 2, -56 * c ** 3, 70 * c ** 4])
    ld = log_derivative(v)
    assert ld.order == 3
    assert list(ld) == [-n * c * c ** k for k in range(4)]


@given(unit_series)
def test_inverse_root_ode(v):
    # -2 psi' = (log v)' psi for psi = v^-1/2
    psi = series_pow_minus_half(v)
    lhs = psi.derivative() * F(-2)
    rhs = series_mul(log_derivative(v), psi.truncate(lhs.order))
    assert lhs == rhs
