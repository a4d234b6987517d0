"""Independent reference computations (sympy and classical closed forms)."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy as sp

lam, r, t = sp.symbols("lam r t")


@lru_cache(maxsize=None)
def eigen_coefficients(n: int, J: Fraction, mu: Fraction, N: int):
    """a_0..a_N of u = r^lam sum a_j r^2j solving -Lap(g_+) u = lam(n - lam) u on
    g_+ = r^-2 (dr^2 + (1 - c r^2)^2 g), with Lap_g f = -mu f; solved directly in sympy."""
    c = sp.Rational(J.numerator, J.denominator) / (2 * n)
    mu_ = sp.Rational(mu.numerator, mu.denominator)
    phi = 1 - c * r ** 2
    a = sp.symbols(f"a1:{N + 1}")
    coeffs = (sp.Integer(1),) + a
    poly = sum(coeffs[j] * r ** (2 * j) for j in range(N + 1))
    # with u = r^lam p(r): r^-lam phi^n (Lap(g_+) u + lam(n - lam) u), density r^-(n+1) phi^n
    s_ = lam * poly + r * sp.diff(poly, r)
    expr = sp.expand(
        (lam - n) * phi ** n * s_
        + r * sp.diff(phi ** n * s_, r)
        - r ** 2 * phi ** (n - 2) * mu_ * poly
        + lam * (n - lam) * phi ** n * poly
    )
    eqs = [expr.coeff(r, 2 * j) for j in range(1, N + 1)]
    sol = sp.solve(eqs, a, dict=True)[0]
    return [sp.Integer(1)] + [sp.factor(sol[x]) for x in a]


def gjms_product(n: int, J: Fraction, mu: Fraction, N: int) -> Fraction:
    """Einstein product formula; sign convention (-1)^N, principal part Lap^N."""
    out = Fraction((-1) ** N)
    for k in range(1, N + 1):
        out *= mu + Fraction(2 * J, n) * (Fraction((n - 1) ** 2, 4) - (k - Fraction(1, 2)) ** 2)
    return out


def critical_q_sphere(n: int, J: Fraction) -> Fraction:
    """Q_n = (n-1)! on the unit round sphere (J = n/2), scaled by (2J/n)^(n/2)."""
    f = Fraction(1)
    for k in range(1, n):
        f *= k
    return f * Fraction(2 * J, n) ** (n // 2)


def sqrt_series_symbolic(order: int = 4):
    vs = sp.symbols(" ".join(f"v{2 * k}" for k in range(1, order + 1)))
    expr = sp.sqrt(1 + sum(v * t ** (k + 1) for k, v in enumerate(vs)))
    ser = sp.series(expr, t, 0, order + 1).removeO()
    return vs, [sp.expand(ser.coeff(t, k)) for k in range(order + 1)]


def to_sympy_poly_in_lam(poly):
    return sum(sp.Rational(c.numerator, c.denominator) * lam ** k for k, c in enumerate(poly.coeffs))
