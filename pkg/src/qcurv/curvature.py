"""Scalar curvature pairings and the low-order holographic coefficient formulas.

Only scalar contractions of the Schouten tensor rho and the Bach tensor B are
represented: J = scal/(2(n-1)), |rho|^2, tr(rho^3) and (B, rho).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IdentityViolation, UnsupportedDimension


@dataclass(frozen=True)
class ScalarCurvatureData:
    n: int
    J: Fraction
    rho_norm_sq: Fraction
    tr_rho3: Fraction
    bach_dot_rho: Fraction = Fraction(0)

    @classmethod
    def einstein(cls, n: int, J) -> "ScalarCurvatureData":
        """rho = (J/n) g, B = 0."""
        J = Fraction(J)
        return cls(n, J, J * J / n, J ** 3 / n ** 2, Fraction(0))


@dataclass(frozen=True)
class SymSpectrum:
    eigenvalues: tuple

    def __post_init__(self):
        if not self.eigenvalues:
            raise ValueError("empty spectrum")
        object.__setattr__(self, "eigenvalues", tuple(Fraction(x) for x in self.eigenvalues))

    def power_sum(self, k: int) -> Fraction:
        return sum((x ** k for x in self.eigenvalues), Fraction(0))


def _elementary_symmetric(xs: Sequence[Fraction], k: int) -> Fraction:
    e = [Fraction(1)] + [Fraction(0)] * k
    for x in xs:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * x
    return e[k]


def wedge3_from_scalars(J, rho_norm_sq, tr_rho3) -> Fraction:
    """tr(wedge^3 rho) through Newton's identity."""
    return (Fraction(J) ** 3 - 3 * Fraction(J) * rho_norm_sq + 2 * Fraction(tr_rho3)) / 6


def newton_wedge3(s: SymSpectrum) -> Fraction:
    e3 = _elementary_symmetric(s.eigenvalues, 3)
    via_power_sums = wedge3_from_scalars(s.power_sum(1), s.power_sum(2), s.power_sum(3))
    if e3 != via_power_sums:
        raise IdentityViolation(f"Newton identity: e3={e3}, power sums give {via_power_sums}")
    return e3


def _check_dimension(n: int):
    if n < 6 or n % 2:
        raise UnsupportedDimension(f"need even n >= 6, got {n}")


def v_coefficients(d: ScalarCurvatureData) -> tuple[Fraction, Fraction, Fraction]:
    _check_dimension(d.n)
    v2 = -d.J / 2
    v4 = (d.J ** 2 - d.rho_norm_sq) / 8
    wedge3 = wedge3_from_scalars(d.J, d.rho_norm_sq, d.tr_rho3)
    v6 = (-wedge3 - d.bach_dot_rho / (3 * (d.n - 4))) / 8
    return v2, v4, v6


def q4_closed_form(d: ScalarCurvatureData, laplace_J=0) -> Fraction:
    return Fraction(d.n, 2) * d.J ** 2 - 2 * d.rho_norm_sq - Fraction(laplace_J)
