from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qcurv.curvature import (
    ScalarCurvatureData,
    SymSpectrum,
    newton_wedge3,
    q4_closed_form,
    v_coefficients,
    wedge3_from_scalars,
)
from qcurv.errors import UnsupportedDimension

from conftest import small


def test_einstein_pairings():
    d = ScalarCurvatureData.einstein(8, 4)
    assert (d.rho_norm_sq, d.tr_rho3, d.bach_dot_rho) == (2, 1, 0)


def test_v_coefficients_model():
    assert v_coefficients(ScalarCurvatureData.einstein(8, 4)) == (-2, F(7, 4), F(-7, 8))


def test_v6_bach_term():
    d = ScalarCurvatureData(8, F(0), F(0), F(0), F(12))
    assert v_coefficients(d)[2] == F(-1, 8)


def test_q4():
    assert q4_closed_form(ScalarCurvatureData.einstein(8, 4)) == 60
    assert q4_closed_form(ScalarCurvatureData.einstein(8, 4), laplace_J=5) == 55


@pytest.mark.parametrize("n", [4, 5, 7])
def test_dimension_guard(n):
    with pytest.raises(UnsupportedDimension):
        v_coefficients(ScalarCurvatureData.einstein(n, 1))


def test_scalar_multiple_of_identity():
    s = SymSpectrum((F(1, 2),) * 8)
    assert newton_wedge3(s) == 56 * F(1, 8)


@settings(max_examples=50)
@given(st.lists(small, min_size=1, max_size=9))
def test_newton_random_spectra(xs):
    s = SymSpectrum(tuple(xs))
    e3 = newton_wedge3(s)
    assert e3 == wedge3_from_scalars(s.power_sum(1), s.power_sum(2), s.power_sum(3))


def test_empty_spectrum():
    with pytest.raises(ValueError):
        SymSpectrum(())
