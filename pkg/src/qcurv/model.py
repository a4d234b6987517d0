"""Einstein model geometries.

For an Einstein metric g with constant J the Poincare-Einstein expansion is
exact: g_r = (1 - c r^2)^2 g with c = J/(2n). Every operator in the package is
then a polynomial in the Laplacian with constant coefficients, and acts on a
formal eigenfunction f (Delta f = -mu f, mu >= 0) by a scalar.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .compositions import factorial
from .curvature import ScalarCurvatureData, SymSpectrum
from .errors import UnsupportedDimension
from .series import Series


@dataclass(frozen=True)
class EinsteinModel:
    n: int
    J: Fraction
    c: Fraction = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 6 or self.n % 2:
            raise UnsupportedDimension(f"need even n >= 6, got {self.n!r}")
        object.__setattr__(self, "J", Fraction(self.J))
        object.__setattr__(self, "c", self.J / (2 * self.n))

    @property
    def half(self) -> int:
        return self.n // 2

    def scalar_data(self) -> ScalarCurvatureData:
        return ScalarCurvatureData.einstein(self.n, self.J)

    def schouten_spectrum(self) -> SymSpectrum:
        return SymSpectrum((self.J / self.n,) * self.n)


def make_model(n: int, J) -> EinsteinModel:
    return EinsteinModel(n, Fraction(J))


def volume_series(m: EinsteinModel, order: int = 4) -> Series:
    """v(r) = (1 - c t)^n; entry j is v_2j."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return Series([comb(m.n, j) * (-m.c) ** j for j in range(order + 1)])


def logdet_series(m: EinsteinModel, order: int = 4) -> list[Fraction]:
    """[D^(1), ..., D^(order)]: t-derivatives at 0 of log det g_t - log det g = 2n log(1 - c t)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return [-2 * m.n * factorial(k - 1) * m.c ** k for k in range(1, order + 1)]


def laplace_expansion(m: EinsteinModel, mu, order: int = 4) -> list[Fraction]:
    """Eigen-actions of Delta^(0..order), where Delta_{g_t} = (1 - c t)^-2 Delta_g."""
    if order < 0:
        raise ValueError("order must be >= 0")
    mu = Fraction(mu)
    return [-factorial(k) * (k + 1) * m.c ** k * mu for k in range(order + 1)]


def laplace_variations(m: EinsteinModel, mu) -> tuple[Fraction, Fraction]:
    """Actions of Delta' and Delta'' (t-derivatives of (1 - c t)^-2 Delta_g at t = 0)."""
    mu = Fraction(mu)
    return -2 * m.c * mu, -6 * m.c ** 2 * mu


def schouten_divergence_action(m: EinsteinModel, mu, power: int = 1) -> Fraction:
    """delta(rho^k d) on an eigenfunction: (J/n)^k mu, since delta d = -Delta."""
    return (m.J / m.n) ** power * Fraction(mu)


def eigen_parameter(mu) -> Fraction:
    mu = Fraction(mu)
    if mu < 0:
        raise ValueError(f"eigen parameter must be >= 0 (-Delta is non-negative), got {mu}")
    return mu
