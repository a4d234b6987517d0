"""Exact rationals, univariate polynomials in ``lam`` and reduced rational functions.

Rationals are :class:`fractions.Fraction`; they are always in lowest terms with a
positive denominator, and ``str()`` gives the canonical ``p/q`` (or ``p``) form.

    >>> lam = Poly.x()
    >>> RatFunc(lam**2 - 9, lam - 3)
    RatFunc(lam + 3)
"""
from __future__ import annotations

import functools
import re
from fractions import Fraction
from typing import Iterable, Union

from .errors import PoleEvaluation, ZeroDenominator

Rational = Fraction
Scalar = Union[int, Fraction]

VAR = "lam"

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string. Decimals are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}")
    return Fraction(num, den)


def fmt_rational(q: Scalar) -> str:
    return str(Fraction(q))


@functools.total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial. Compares below every integer; no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()


class Poly:
    """Dense polynomial with Fraction coefficients, lowest power first."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> "Poly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    # -- structure -----------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError("negative power")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Poly(c / lc for c in self.coeffs)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        dl = len(dv)
        inv_lc = 1 / dv[-1]
        if len(rem) < dl:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dl + 1)
        for k in range(len(rem) - dl, -1, -1):
            q = rem[k + dl - 1] * inv_lc
            quot[k] = q
            if q:
                for i, d in enumerate(dv):
                    rem[k + i] -= q * d
        return Poly(quot), Poly(rem[: dl - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDenominator("polynomial divided by zero scalar")
            return Poly(c / other for c in self.coeffs)
        if isinstance(other, Poly):
            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly((other,)), self)
        return NotImplemented

    # -- evaluation / calculus --------------------------------------------
    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, a: Scalar) -> "Poly":
        """p(lam + a)."""
        return self.compose(Poly((a, 1)))

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = VAR if k == 1 else f"{VAR}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_coefficient(p: Poly, k: int) -> Fraction:
    return p.coefficient(k)


def poly_derivative_at_zero(p: Poly) -> Fraction:
    return p.coefficient(1)


class RatFunc:
    """num/den in lowest terms with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _normalized: bool = False):
        num = Poly._coerce(num)
        den = Poly((1,)) if den is None else Poly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFunc needs polynomial or scalar parts")
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if not _normalized:
            num, den = _reduce(num, den)
        self.num: Poly = num
        self.den: Poly = den
        self._hash = None

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def poles(self) -> Poly:
        return self.den

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return RatFunc(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc(Poly())
            return RatFunc(self.num * other, self.den, _normalized=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDenominator("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __call__(self, x: Scalar) -> Fraction:
        return ratfunc_eval(self, x)

    def compose(self, inner: Poly) -> "RatFunc":
        return RatFunc(self.num.compose(inner), self.den.compose(inner))

    def shift(self, a: Scalar) -> "RatFunc":
        return self.compose(Poly((a, 1)))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RatFunc", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return Poly(), Poly((1,))
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
    lc = den.lc
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


def ratfunc_normalize(num: Poly, den: Poly) -> RatFunc:
    return RatFunc(num, den)


def ratfunc_eval(f: RatFunc, x0: Scalar) -> Fraction:
    x0 = Fraction(x0)
    d = f.den(x0)
    if d == 0:
        raise PoleEvaluation(x0)
    return f.num(x0) / d
