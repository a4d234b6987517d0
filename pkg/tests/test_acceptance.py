"""One test per acceptance criterion; each prints a PASS/FAIL line (also shown in the pytest summary)."""
from __future__ import annotations

import random
import time
from fractions import Fraction as F

import pytest

from qcurv.checks import default_grid, q8_main_terms, run_suite
from qcurv.cli import main
from qcurv.compositions import build_recursion_table, factorial, multiplicity_sum
from qcurv.curvature import SymSpectrum, _elementary_symmetric, wedge3_from_scalars
from qcurv.families import (
    closed_form_p,
    inverse_sqrt_volume,
    normalized_leading,
    omega_leading,
    p_action,
    q_curvature,
)
from qcurv.model import make_model
from qcurv.qres import critical_q, holographic, holographic_terms, qres_definition, v_polynomial
from qcurv.series import Series, half_power_check, series_sqrt

from conftest import ACCEPTANCE_LINES, GRID_MODELS, MUS

RNG = random.Random(20240601)


def _rand_q(lo=-40, hi=40, den=17):
    while True:
        x = F(RNG.randint(lo, hi), RNG.randint(1, den))
        if x:
            return x


def report(k: int, text: str, ok: bool):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {k:2d}: {text}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def _q8_residual(m, q8):
    return q8 - sum(v for _, v in q8_main_terms(m))


def test_01_q8_critical():
    m = make_model(8, 4)
    terms = [v for _, v in q8_main_terms(m)]
    ok = critical_q(m) == 5040 and terms == [25920, 8640, 64800, -46080, -103680, -69120, 124416, 144]
    ok &= _q8_residual(m, critical_q(m)) == 0
    slow = 0.0
    for J in [F(-2)] + [_rand_q() for _ in range(5)]:
        t0 = time.perf_counter()
        mj = make_model(8, J)
        ok &= _q8_residual(mj, critical_q(mj)) == 0
        slow = max(slow, time.perf_counter() - t0)
    report(1, f"critical Q8 = 5040 = termwise sum on (8,4); (8,-2) and 5 random J exact; max {slow:.3f}s/model", ok and slow < 1)


def test_02_q8_subcritical():
    ok = True
    for n, J in [(10, F(5)), (12, F(3, 2)), (14, F(7))]:
        m = make_model(n, J)
        ok &= _q8_residual(m, q_curvature(m, 4)) == 0
    report(2, "Q8 from P8(n/2-4) on (10,5), (12,3/2), (14,7) equals the recursive formula", ok)


def test_03_v8_vanishes():
    Js = [_rand_q() for _ in range(10)]
    ok = all(
        len(v_polynomial(make_model(8, J), 4).poly.coeffs) == 0 for J in Js
    )
    report(3, "V8(lam) is the zero polynomial on n=8 for 10 random J", ok)


def test_04_leading_coefficient():
    ok = True
    for n, J in GRID_MODELS:
        m = make_model(n, J)
        _, w = holographic(m, 4)
        for N in range(1, 5):
            ok &= qres_definition(m, N).poly.coefficient(N) == -(4 ** N) * factorial(N) * w[N]
    ok &= qres_definition(make_model(8, 4), 4).poly.coefficient(4) == -24
    report(4, "lam^N coefficient of Q_2N^res = -2^2N N! w_2N, N=1..4 on the grid; -24 on (8,4)", ok)


def test_05_fundamental_three_way():
    ok = True
    for n, J in GRID_MODELS:
        m = make_model(n, J)
        omega, psi = omega_leading(m, 4), inverse_sqrt_volume(m, 4)
        for N in range(1, 5):
            ok &= all(normalized_leading(m, mu, N) == omega[N] == psi[N] for mu in MUS)
    om = omega_leading(make_model(8, 4), 2)
    ok &= om[1] == 1 and om[2] == F(5, 8)
    report(5, "recursion leading coeff = omega recursion = v^-1/2 coefficient; omega_2=1, omega_4=5/8", ok)


def test_06_closed_forms():
    ok = all(
        p_action(make_model(n, J), mu, N) == closed_form_p(make_model(n, J), mu, N)
        for n, J in GRID_MODELS for mu in MUS for N in (1, 2, 3)
    )
    report(6, f"P2, P4, P6 closed forms = recursion on the grid ({len(MUS)} mu values > degree bound 4)", ok and len(MUS) > 4)


def test_07_half_power():
    ok = True
    for _ in range(20):
        v = [F(1)] + [_rand_q() for _ in range(4)]
        h = half_power_check(v)
        v2, v4, v6, v8 = v[1:]
        ok &= 128 * h.w[4] == 64 * v8 - 32 * v6 * v2 - 16 * v4 ** 2 + 24 * v2 ** 2 * v4 - 5 * v2 ** 4
    w = series_sqrt(Series([1, -2, F(7, 4), F(-7, 8), F(35, 128)]))
    ok &= list(w) == [1, -1, F(3, 8), F(-1, 16), F(1, 256)]
    report(7, "half-power formulas and the w8 identity on 20 random v; model v -> (1,-1,3/8,-1/16,1/256)", ok)


def test_08_multiplicities():
    expected = {
        ((1,), 3): -3, ((3,), 1): -3, ((2,), 2): 9, ((1, 2), 1): 8,
        ((1, 1), 2): -12, ((2, 1), 1): 12, ((1, 1, 1), 1): -18,
    }
    ok = build_recursion_table(4).solved_for_top() == expected
    ok &= all(multiplicity_sum(N) == 0 for N in range(2, 9))
    ok &= build_recursion_table(2).solved_for_top() == {((1,), 1): -1}
    ok &= build_recursion_table(3).solved_for_top() == {((1,), 2): -2, ((2,), 1): 2, ((1, 1), 1): -3}
    report(8, "N=4 table has the seven Q8 coefficients; sum m_I = 0 for 2..8; N=2,3 tables match Q4, Q6", ok)


def test_09_holographic():
    ok = True
    for J in (F(4), F(-2), F(7, 3)):
        m = make_model(8, J)
        ok &= 8 * critical_q(m) == 2 ** 7 * factorial(4) * factorial(3) * sum(holographic_terms(m))
    ok &= 8 * critical_q(make_model(8, 4)) == 40320
    report(9, "8 Q8 = 2^7 4! 3! sum (8-2j) T_2j(0)(v_{8-2j}) on n=8 models; 40320 on (8,4)", ok)


def test_10_identities_on_grid():
    ids = ["C05", "C08", "C09", "C11", "C12", "C18", "C22", "C23", "C24", "C25", "C27", "C28"]
    rep = run_suite(default_grid(), ids)
    ok = rep.summary["counts"]["fail"] == 0 and rep.summary["total"] > 0
    rng = random.Random(7)
    for _ in range(50):
        xs = [F(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(rng.randint(1, 10))]
        s = SymSpectrum(tuple(xs))
        ok &= _elementary_symmetric(s.eigenvalues, 3) == wedge3_from_scalars(s.power_sum(1), s.power_sum(2), s.power_sum(3))
    report(10, f"supporting identities exact on the default grid ({rep.summary['total']} cells) + Newton on 50 spectra", ok)


def test_11_conjecture_reported():
    rep = run_suite([(n, J, F(0)) for n, J in [(8, 4), (10, 5), (12, F(3, 2)), (14, 7)]], ["C26"])
    statuses = {r.status for r in rep.results}
    ok = len(rep.results) == 4 and statuses == {"conjecture-pass"} and rep.summary["ok"]
    report(11, "VQ conjecture reported for N=1..4, n in {8,10,12,14}: conjecture-pass", ok)


def test_12_full_suite(capsys, tmp_path):
    t0 = time.perf_counter()
    code = main(["verify", "--format", "json"])
    elapsed = time.perf_counter() - t0
    capsys.readouterr()
    main(["verify", "--n", "8", "--J", "4", "--format", "json"])
    first = capsys.readouterr().out
    main(["verify", "--n", "8", "--J", "4", "--format", "json", "--parallel"])
    second = capsys.readouterr().out
    from pathlib import Path
    golden = (Path(__file__).parent / "golden" / "verify_n8_J4.json").read_text()
    ok = code == 0 and elapsed < 30 and first == second == golden
    report(12, f"default suite exit 0 in {elapsed:.2f}s; (8,4) JSON byte-stable against golden", ok)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
