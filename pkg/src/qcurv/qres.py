"""Q-curvature polynomials, V-polynomials and the critical Q-curvature.

On the model class every operator is formally self-adjoint, so the adjoint
actions T*_2j(lam)(v) are the ordinary actions on constants (mu = 0) times v.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .compositions import factorial
from .errors import NonPolynomialResult, UnsupportedDimension, UnsupportedN
from .exact_arith import Poly, RatFunc
from .families import gjms_constant, q_curvature, t_action
from .model import EinsteinModel, volume_series
from .series import Series, series_mul, series_sqrt

ZERO = Fraction(0)
LAM = Poly.x()


@dataclass(frozen=True)
class QResPoly:
    N: int
    n: int
    poly: Poly
    route: str  # "definition" | "interpolation"


@dataclass(frozen=True)
class VPoly:
    N: int
    n: int
    poly: Poly


def _check_range(m: EinsteinModel, N: int):
    if N < 1 or 2 * N > m.n:
        raise UnsupportedDimension(f"need 1 <= N <= n/2, got N={N}, n={m.n}")


@lru_cache(maxsize=None)
def holographic(m: EinsteinModel, order: int) -> tuple[Series, Series]:
    """(v, w = sqrt(v)) truncated at t**order."""
    v = volume_series(m, order)
    return v, series_sqrt(v)


def _t_series(m: EinsteinModel, N: int, shift: int) -> Series:
    return Series([t_action(m, ZERO, j).shift(shift) for j in range(N + 1)])


def _as_poly(f: RatFunc, what: str) -> Poly:
    if not f.is_polynomial():
        raise NonPolynomialResult(f"{what} keeps denominator {f.den}")
    return f.num


@lru_cache(maxsize=None)
def _qres_definition_poly(m: EinsteinModel, N: int) -> Poly:
    half = Fraction(m.n, 2)
    prefactor = Poly.const(-(4 ** N) * factorial(N))
    for k in range(1, N + 1):
        prefactor = prefactor * Poly((half - 2 * N + k, 1))
    v, _ = holographic(m, max(N, 1))
    v_rf = Series([RatFunc(c) for c in v.coeffs[: N + 1]])
    bracket = series_mul(_t_series(m, N, m.n - 2 * N), v_rf)[N]
    return _as_poly(bracket * prefactor, f"Q_{2 * N}^res")


def qres_definition(m: EinsteinModel, N: int) -> QResPoly:
    _check_range(m, N)
    return QResPoly(N, m.n, _qres_definition_poly(m, N), "definition")


def qres_reduced(m: EinsteinModel, N: int) -> Poly:
    """Q_2N^res(lam) / lam (exact; the constant term vanishes)."""
    q, r = divmod(_qres_definition_poly(m, N), LAM)
    if r:
        raise NonPolynomialResult(f"Q_{2 * N}^res(0) = {r} is not zero")
    return q


# -- interpolation route ---------------------------------------------------


def interpolation_nodes(n: int, N: int) -> list[Fraction]:
    """x_k = -n/2 + 2N - k, k = 1..N."""
    return [Fraction(-n, 2) + 2 * N - k for k in range(1, N + 1)]


def _lagrange_weights(nodes: Sequence[Fraction], x: Fraction) -> list[Fraction]:
    out = []
    for j, xj in enumerate(nodes):
        w = Fraction(1)
        for k, xk in enumerate(nodes):
            if k != j:
                w *= (x - xk) / (xj - xk)
        out.append(w)
    return out


def _lagrange_basis(nodes: Sequence[Fraction]) -> list[Poly]:
    out = []
    for j, xj in enumerate(nodes):
        others = [xk for k, xk in enumerate(nodes) if k != j]
        denom = Fraction(1)
        for xk in others:
            denom *= xj - xk
        out.append(Poly.from_roots(others, 1 / denom))
    return out


class _Interpolator:
    """Values of reduced Q-polynomials at the interpolation nodes.

    ``top(M)`` supplies Q_2M and ``apply_p(j, value)`` the action of P_2j on a
    value; the values themselves only need ``+`` and multiplication by Fractions.
    The same recursion serves the numeric route and the formal one.
    """

    def __init__(self, n: int, top: Callable, apply_p: Callable):
        self.n = n
        self.top = top
        self.apply_p = apply_p
        self._cache = {}

    def node_values(self, M: int) -> list:
        if M in self._cache:
            return self._cache[M]
        nodes = interpolation_nodes(self.n, M)
        values = []
        for j in range(1, M + 1):
            if j == M:
                values.append(self.top(M))
            else:
                inner = self.evaluate(M - j, nodes[j - 1])
                values.append(self.apply_p(j, inner) * Fraction((-1) ** j))
        self._cache[M] = values
        return values

    def evaluate(self, M: int, x: Fraction):
        weights = _lagrange_weights(interpolation_nodes(self.n, M), x)
        values = self.node_values(M)
        acc = values[0] * weights[0]
        for v, w in zip(values[1:], weights[1:]):
            acc = acc + v * w
        return acc

    def leading(self, M: int):
        """lam^(M-1) coefficient of the reduced polynomial = lam^M coefficient of Q_2M^res."""
        nodes = interpolation_nodes(self.n, M)
        values = self.node_values(M)
        acc = None
        for j, (xj, v) in enumerate(zip(nodes, values)):
            denom = Fraction(1)
            for k, xk in enumerate(nodes):
                if k != j:
                    denom *= xj - xk
            term = v * (1 / denom)
            acc = term if acc is None else acc + term
        return acc


def model_q_value(m: EinsteinModel, M: int) -> Fraction:
    """Q_2M on the model; the critical one from the holographic formula."""
    if 2 * M == m.n:
        return holographic_q(m)
    return q_curvature(m, M)


def qres_interpolation(m: EinsteinModel, N: int) -> QResPoly:
    _check_range(m, N)
    interp = _Interpolator(
        m.n,
        top=lambda M: model_q_value(m, M),
        apply_p=lambda j, value: gjms_constant(m, j) * value,
    )
    nodes = interpolation_nodes(m.n, N)
    reduced = Poly()
    for basis, value in zip(_lagrange_basis(nodes), interp.node_values(N)):
        reduced = reduced + basis * value
    return QResPoly(N, m.n, reduced * LAM, "interpolation")


class FormalSum:
    """Formal linear combination of terms P_2I(Q_2a), keyed by (I, a)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def q(cls, a: int) -> "FormalSum":
        return cls({((), a): Fraction(1)})

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return FormalSum(out)

    def __mul__(self, s) -> "FormalSum":
        return FormalSum({k: v * s for k, v in self.terms.items()})

    def apply_p(self, j: int) -> "FormalSum":
        return FormalSum({((j,) + I, a): v for (I, a), v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __repr__(self):
        return f"FormalSum({self.terms})"


def interpolation_multiplicities(N: int, n: int) -> dict:
    """mu_(I,a): coefficients of (-1)^(N-1) (N-1)! * lam^N coefficient of Q_2N^res,
    written as a formal combination of P_2I(Q_2a)."""
    if N < 1 or 2 * N > n:
        raise UnsupportedN(f"need 1 <= N <= n/2, got N={N}, n={n}")
    interp = _Interpolator(n, top=FormalSum.q, apply_p=lambda j, value: value.apply_p(j))
    lead = interp.leading(N) * Fraction((-1) ** (N - 1) * factorial(N - 1))
    return dict(lead.terms)


# -- V-polynomials, critical Q -------------------------------------------------


@lru_cache(maxsize=None)
def _v_poly(m: EinsteinModel, N: int) -> Poly:
    half = Fraction(m.n, 2)
    prefactor = Poly.const(1)
    for k in range(1, N + 1):
        prefactor = prefactor * Poly((k - half, 1))
    v, _ = holographic(m, max(N, 1))
    total = RatFunc(0)
    for j in range(N + 1):
        total = total + t_action(m, ZERO, j) * ((2 * N + 2 * j) * v[N - j])
    return _as_poly(total * prefactor, f"V_{2 * N}")


def v_polynomial(m: EinsteinModel, N: int) -> VPoly:
    _check_range(m, N)
    return VPoly(N, m.n, _v_poly(m, N))


def critical_q(m: EinsteinModel) -> Fraction:
    """Q_n as the lam-derivative at 0 of the critical Q-curvature polynomial."""
    return _qres_definition_poly(m, m.n // 2).coefficient(1)


@lru_cache(maxsize=None)
def holographic_q(m: EinsteinModel) -> Fraction:
    half = m.n // 2
    v, _ = holographic(m, half)
    s = sum(
        ((m.n - 2 * j) * t_action(m, ZERO, j)(0) * v[half - j] for j in range(half)),
        Fraction(0),
    )
    scale = Fraction(2 ** (m.n - 1) * factorial(half) * factorial(half - 1), m.n)
    return (-1) ** half * scale * s


def holographic_terms(m: EinsteinModel) -> list[Fraction]:
    """Summands (n - 2j) T_2j(0)(v_{n-2j}), j < n/2."""
    half = m.n // 2
    v, _ = holographic(m, half)
    return [(m.n - 2 * j) * t_action(m, ZERO, j)(0) * v[half - j] for j in range(half)]


def vq_residual(m: EinsteinModel, N: int) -> Poly:
    """2^(2N-2) (N-1)! V_2N(lam) - (n/2 - N) Qtilde_2N(lam - n + 2N); conjecturally zero."""
    _check_range(m, N)
    lhs = _v_poly(m, N) * (4 ** (N - 1) * factorial(N - 1))
    rhs = qres_reduced(m, N).shift(2 * N - m.n) * (Fraction(m.n, 2) - N)
    return lhs - rhs
