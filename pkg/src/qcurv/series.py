"""Truncated power series in t = r**2.

Coefficients may be any ring elements supporting ``+ - *`` and division by
units (``Fraction`` and :class:`~qcurv.exact_arith.RatFunc` are both used).
A series of order ``N`` carries the coefficients of t**0 .. t**N, i.e. of
r**0 .. r**(2N).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from .errors import (
    ConstantTermNotOne,
    HalfPowerViolation,
    NonUnitConstantTerm,
    OrderMismatch,
)

DEFAULT_ORDER = 4
MAX_ORDER = 8


def _zero_like(c):
    return c * 0


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Any], order: Optional[int] = None):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        if not cs:
            raise ValueError("a series needs at least its constant term")
        if order is not None:
            if order < 0:
                raise ValueError("negative truncation order")
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                cs = cs + [_zero_like(cs[0])] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Series([" + ", ".join(str(c) for c in self.coeffs) + "])"

    def __add__(self, other):
        _check_orders(self, other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        _check_orders(self, other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Series([-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        return Series([a * other for a in self.coeffs])

    def __rmul__(self, other):
        return Series([other * a for a in self.coeffs])

    def derivative(self) -> "Series":
        """d/dt; the result has order one less (order 0 stays order 0)."""
        if self.order == 0:
            return Series([_zero_like(self.coeffs[0])])
        return Series([k * self.coeffs[k] for k in range(1, len(self.coeffs))])

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, order)


def _check_orders(a: Series, b: Series):
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")


def series_mul(a: Series, b: Series) -> Series:
    _check_orders(a, b)
    out = []
    for k in range(a.order + 1):
        acc = a.coeffs[0] * b.coeffs[k]
        for i in range(1, k + 1):
            acc = acc + a.coeffs[i] * b.coeffs[k - i]
        out.append(acc)
    return Series(out)


def _unit_inverse(c):
    try:
        if not c:
            raise NonUnitConstantTerm("constant term is zero")
        return 1 / c
    except ZeroDivisionError as exc:
        raise NonUnitConstantTerm(str(exc)) from exc


def series_inv(a: Series) -> Series:
    inv0 = _unit_inverse(a.coeffs[0])
    out = [inv0]
    for k in range(1, a.order + 1):
        acc = a.coeffs[1] * out[k - 1]
        for i in range(2, k + 1):
            acc = acc + a.coeffs[i] * out[k - i]
        out.append(-acc * inv0)
    return Series(out)


def series_sqrt(a: Series) -> Series:
    """Square root with constant term 1, coefficient by coefficient from w*w = a."""
    if a.coeffs[0] != 1:
        raise ConstantTermNotOne(f"constant term is {a.coeffs[0]}, expected 1")
    w = [a.coeffs[0]]
    for k in range(1, a.order + 1):
        acc = a.coeffs[k]
        for i in range(1, k):
            acc = acc - w[i] * w[k - i]
        w.append(acc / 2)
    return Series(w)


def log_derivative(a: Series) -> Series:
    """a'/a (d/dt), of order ``a.order - 1``."""
    if a.order == 0:
        _unit_inverse(a.coeffs[0])
        return Series([_zero_like(a.coeffs[0])])
    da = a.derivative()
    return series_mul(da, series_inv(a.truncate(da.order)))


def series_pow_minus_half(a: Series) -> Series:
    return series_inv(series_sqrt(a))


@dataclass(frozen=True)
class HolographicCoefficients:
    v: tuple
    w: tuple
    n: Optional[int] = None


def _sroot_closed_forms(v):
    """The four displayed coefficient formulas for sqrt(1 + v2 t + v4 t^2 + ...)."""
    v2, v4, v6, v8 = (v[k] if k < len(v) else Fraction(0) for k in (1, 2, 3, 4))
    return [
        v2 / 2,
        (4 * v4 - v2 ** 2) / 8,
        (8 * v6 - 4 * v4 * v2 + v2 ** 3) / 16,
        (64 * v8 - 32 * v6 * v2 - 16 * v4 ** 2 + 24 * v2 ** 2 * v4 - 5 * v2 ** 4) / 128,
    ]


def half_power_check(v: Sequence, n: Optional[int] = None) -> HolographicCoefficients:
    vs = Series(v)
    ws = series_sqrt(vs)
    for idx, expected in enumerate(_sroot_closed_forms(vs.coeffs), start=1):
        if idx <= vs.order and ws[idx] != expected:
            raise HalfPowerViolation(idx)
    if series_mul(ws, ws) != vs:
        raise HalfPowerViolation(0)
    return HolographicCoefficients(tuple(vs.coeffs), tuple(ws.coeffs), n)
