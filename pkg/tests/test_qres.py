from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qcurv.compositions import build_recursion_table
from qcurv.errors import UnsupportedDimension, UnsupportedN
from qcurv.exact_arith import Poly
from qcurv.families import gjms_constant
from qcurv.model import make_model
from qcurv.qres import (
    critical_q,
    holographic,
    holographic_q,
    holographic_terms,
    interpolation_multiplicities,
    interpolation_nodes,
    qres_definition,
    qres_interpolation,
    qres_reduced,
    v_polynomial,
    vq_residual,
)

from conftest import GRID_MODELS
from oracles import critical_q_sphere

LAM = Poly.x()
S8 = make_model(8, 4)
js = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def test_q8_res_sphere():
    assert qres_definition(S8, 4).poly == -24 * LAM ** 4 + 432 * LAM ** 3 - 2568 * LAM ** 2 + 5040 * LAM
    assert qres_definition(S8, 2).poly == -12 * LAM ** 2 + 36 * LAM
    assert qres_reduced(S8, 2) == -12 * LAM + 36


@pytest.mark.parametrize("n,J", GRID_MODELS + [(6, F(3)), (16, F(-1, 2))])
def test_critical_q_oracle(n, J):
    m = make_model(n, J)
    assert critical_q(m) == holographic_q(m) == critical_q_sphere(n, J)


def test_holographic_sum_n8():
    assert 8 * critical_q(S8) == 40320
    assert 2 ** 7 * 24 * 6 * sum(holographic_terms(S8)) == 40320


@pytest.mark.parametrize("n,J", GRID_MODELS)
def test_routes_agree(n, J):
    m = make_model(n, J)
    for N in range(1, min(4, m.half) + 1):
        assert qres_interpolation(m, N).poly == qres_definition(m, N).poly


@settings(max_examples=10, deadline=None)
@given(js)
def test_v8_vanishes(J):
    assert v_polynomial(make_model(8, J), 4).poly.is_zero()


@pytest.mark.parametrize("n,J", GRID_MODELS)
def test_leading_and_vq(n, J):
    m = make_model(n, J)
    _, w = holographic(m, 4)
    for N in range(1, min(4, m.half) + 1):
        assert qres_definition(m, N).poly.coefficient(N) == -(4 ** N) * [1, 1, 2, 6, 24][N] * w[N]
        assert v_polynomial(m, N).poly.coefficient(N) == 0
        assert vq_residual(m, N).is_zero()


def test_nodes():
    assert interpolation_nodes(8, 4) == [3, 2, 1, 0]


@pytest.mark.parametrize("N", range(1, 7))
def test_formal_interpolation_gives_multiplicities(N):
    assert interpolation_multiplicities(N, 2 * N + 4) == build_recursion_table(N).entries
    assert interpolation_multiplicities(N, 2 * N) == build_recursion_table(N).entries


def test_range_errors():
    with pytest.raises(UnsupportedDimension):
        qres_definition(S8, 5)
    with pytest.raises(UnsupportedN):
        interpolation_multiplicities(5, 8)


def test_q_factor_n8():
    q2, q4, q6 = (qres_definition(S8, k).poly for k in (1, 2, 3))
    assert q6(1) == -gjms_constant(S8, 1) * q4(1)
    assert q4(-2) == -gjms_constant(S8, 2)
