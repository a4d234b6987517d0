"""Solution operators T_2N(lam), GJMS families P_2N(lam) and their constant terms.

Everything is an eigen-action on a model: a rational function of ``lam`` for
fixed (n, J, mu). Results are memoised per (model, mu, N); all inputs are
immutable so the caches are safe to share.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .compositions import factorial
from .errors import (
    InvalidOrder,
    NonPolynomialFamily,
    SingularRecursion,
    UnsupportedN,
)
from .exact_arith import Poly, RatFunc
from .model import (
    EinsteinModel,
    eigen_parameter,
    laplace_expansion,
    laplace_variations,
    logdet_series,
    schouten_divergence_action,
)
from .series import Series, series_pow_minus_half

LAM = Poly.x()


@dataclass(frozen=True)
class FamilyAction:
    N: int
    action: RatFunc
    model: EinsteinModel
    mu: Fraction


@dataclass(frozen=True)
class GjmsValue:
    N: int
    p_action: Poly
    gjms_at_spectral: Fraction
    q_value: Optional[Fraction]


def _check_order(m: EinsteinModel, N: int):
    if not isinstance(N, int) or N < 0 or 2 * N > m.n:
        raise InvalidOrder(f"need 0 <= 2N <= n, got N={N}, n={m.n}")


@lru_cache(maxsize=None)
def t_action(m: EinsteinModel, mu: Fraction, N: int) -> RatFunc:
    """Eigen-action of T_2N(lam), solved from the recursion in r^2 powers."""
    _check_order(m, N)
    if N == 0:
        return RatFunc(1)
    lap = laplace_expansion(m, mu, N - 1)
    logdet = logdet_series(m, N)
    lhs = RatFunc(0)
    for k in range(1, N + 1):
        weight = Poly((2 * N - 2 * k, 1))  # lam + 2N - 2k
        factor = (weight * logdet[k - 1] + lap[k - 1]) / factorial(k - 1)
        lhs = lhs + t_action(m, mu, N - k) * factor
    divisor = Poly((2 * N - m.n, 2)) * (-2 * N)  # -2N (2 lam - n + 2N)
    if divisor.is_zero():
        raise SingularRecursion(f"vanishing divisor at N={N}")
    return lhs / divisor


def solve_T_families(m: EinsteinModel, mu, N_max: int) -> list[FamilyAction]:
    mu = eigen_parameter(mu)
    if N_max < 1:
        raise InvalidOrder("N_max must be >= 1")
    _check_order(m, N_max)
    return [FamilyAction(N, t_action(m, mu, N), m, mu) for N in range(N_max + 1)]


def pole_clearing(m: EinsteinModel, N: int) -> Poly:
    """2^2N N! (n/2 - lam - 1) ... (n/2 - lam - N)."""
    p = Poly.const(4 ** N * factorial(N))
    for k in range(1, N + 1):
        p = p * Poly((Fraction(m.n, 2) - k, -1))
    return p


@lru_cache(maxsize=None)
def p_action(m: EinsteinModel, mu: Fraction, N: int) -> Poly:
    """Eigen-action of the polynomial family P_2N(lam)."""
    prod = t_action(m, mu, N) * pole_clearing(m, N)
    if not prod.is_polynomial():
        raise NonPolynomialFamily(f"P_{2 * N}(lam) keeps denominator {prod.den}")
    return prod.num


@lru_cache(maxsize=None)
def gjms(m: EinsteinModel, mu: Fraction, N: int) -> Fraction:
    """Action of the GJMS operator P_2N = P_2N(n/2 - N); N = 0 gives 1."""
    return p_action(m, mu, N)(Fraction(m.n, 2) - N)


def gjms_constant(m: EinsteinModel, N: int) -> Fraction:
    """P_2N(1), the action on constants."""
    return gjms(m, Fraction(0), N)


@lru_cache(maxsize=None)
def q_curvature(m: EinsteinModel, N: int) -> Fraction:
    """Q_2N from P_2N(1) = (-1)^N (n/2 - N) Q_2N; subcritical only."""
    if N < 1 or 2 * N >= m.n:
        raise UnsupportedN(f"Q_{2 * N} is critical or out of range in dimension {m.n}")
    return gjms_constant(m, N) / ((-1) ** N * (Fraction(m.n, 2) - N))


def p_family(m: EinsteinModel, mu, N: int) -> GjmsValue:
    mu = eigen_parameter(mu)
    if N < 1:
        raise InvalidOrder("N must be >= 1")
    _check_order(m, N)
    poly = p_action(m, mu, N)
    q = q_curvature(m, N) if 2 * N < m.n else None
    return GjmsValue(N, poly, gjms(m, mu, N), q)


def closed_form_p(m: EinsteinModel, mu, N: int) -> Poly:
    """P_2(lam), P_4(lam), P_6(lam) from their explicit curvature formulas."""
    mu = eigen_parameter(mu)
    n, J = m.n, m.J
    lap = Poly.const(-mu)
    rho_sq = J * J / n
    p2 = lap - LAM * J
    if N == 1:
        return p2
    shift = Poly((2 - n, 2))  # 2 lam - n + 2
    p4 = (
        (lap - (LAM + 2) * J) * (lap - LAM * J)
        + LAM * shift * rho_sq
        + shift * (2 * schouten_divergence_action(m, mu))
        # (dJ, d) vanishes: J is constant
    )
    if N == 2:
        return p4
    if N == 3:
        d_lap1, d_lap2 = laplace_variations(m, mu)
        logdet2, logdet3 = logdet_series(m, 3)[1:]
        a = Poly((n - 4, -2))  # n - 4 - 2 lam
        b = Poly((n - 2, -2))  # n - 2 - 2 lam
        return (
            4 * a * b * (LAM * logdet3 + d_lap2)
            + 4 * a * ((LAM + 2) * logdet2 + d_lap1) * p2
            + (lap - (LAM + 4) * J) * p4
        )
    raise UnsupportedN(f"no closed form for N={N}")


def check_factorization(m: EinsteinModel, mu, N: int, j: int) -> Fraction:
    """P_{n-2j}(N) - P_{2N-2j}(n-N) P_{n-2N}(N); zero when the families factor."""
    mu = eigen_parameter(mu)
    half = m.n // 2
    if not (0 <= j <= N <= half):
        raise InvalidOrder(f"need 0 <= j <= N <= n/2, got N={N}, j={j}")
    lhs = p_action(m, mu, half - j)(N)
    rhs = p_action(m, mu, N - j)(m.n - N) * p_action(m, mu, half - N)(N)
    return lhs - rhs


def omega_leading(m: EinsteinModel, N_max: int) -> list[Fraction]:
    """Leading coefficients omega_2N, from  sum_k D^(k)/(k-1)! omega_{2N-2k} = -4N omega_2N."""
    _check_order(m, N_max)
    logdet = logdet_series(m, max(N_max, 1))
    omega = [Fraction(1)]
    for N in range(1, N_max + 1):
        s = sum(
            (logdet[k - 1] * omega[N - k] / factorial(k - 1) for k in range(1, N + 1)),
            Fraction(0),
        )
        omega.append(-s / (4 * N))
    return omega


def normalized_leading(m: EinsteinModel, mu, N: int) -> Fraction:
    """Leading coefficient of (lam - n/2 + 1)...(lam - n/2 + N) T_2N(lam)."""
    mu = eigen_parameter(mu)
    return p_action(m, mu, N).coefficient(N) * (-1) ** N / (4 ** N * factorial(N))


def inverse_sqrt_volume(m: EinsteinModel, order: int) -> Series:
    from .model import volume_series

    return series_pow_minus_half(volume_series(m, max(order, 1)))


def denominator_roots_ok(fa: FamilyAction) -> bool:
    """Every root of the denominator lies in {n/2 - 1, ..., n/2 - N}."""
    den = fa.action.den
    allowed = [Fraction(fa.model.n, 2) - k for k in range(1, fa.N + 1)]
    rest = den
    for r in allowed:
        lin = Poly((-r, 1))
        while rest.degree >= 1:
            q, rem = divmod(rest, lin)
            if rem:
                break
            rest = q
    return rest.degree == 0
