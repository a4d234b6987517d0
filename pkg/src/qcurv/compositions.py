"""Compositions of integers and the multiplicities m_I.

A composition is a plain tuple of positive ints; ``(1, 3)`` and ``(3, 1)``
are different compositions of 4.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidN

Composition = tuple


@lru_cache(maxsize=None)
def factorial(k: int) -> int:
    if k < 0:
        raise ValueError("factorial of a negative number")
    return 1 if k < 2 else k * factorial(k - 1)


def _check_n(N: int):
    if not isinstance(N, int) or N < 1:
        raise InvalidN(f"N must be a positive integer, got {N!r}")


def _check_composition(I):
    if not I or any((not isinstance(p, int)) or p < 1 for p in I):
        raise ValueError(f"not a composition: {I!r}")


def enumerate_compositions(N: int) -> list[Composition]:
    """All 2**(N-1) compositions of N, lexicographically ordered."""
    _check_n(N)
    out = []
    # each subset of the N-1 gaps is a set of cut points
    for cuts in itertools.product((False, True), repeat=N - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return sorted(out)


@lru_cache(maxsize=None)
def multiplicity(I: Composition) -> Fraction:
    I = tuple(I)
    _check_composition(I)
    size, r = sum(I), len(I)
    m = Fraction(-((-1) ** r) * factorial(size) * factorial(size - 1))
    for part in I:
        m /= factorial(part) * factorial(part - 1)
    for a, b in zip(I, I[1:]):
        m /= a + b
    return m


def multiplicity_sum(N: int) -> Fraction:
    return sum((multiplicity(I) for I in enumerate_compositions(N)), Fraction(0))


@dataclass(frozen=True)
class RecursionTable:
    """Coefficients of  sum_{|I|+a=N} (-1)^(N+a) m_(I,a) P_2I(Q_2a) = rhs_scale * w_2N.

    ``entries`` maps ``(I, a)`` (``I`` possibly the empty tuple) to the
    coefficient ``(-1)^(N+a) m_(I,a)``; the ``((), N)`` entry is 1.
    """

    N: int
    entries: dict = field(compare=False)
    rhs_scale: Fraction

    def solved_for_top(self) -> dict:
        """Coefficients c with Q_2N = sum c * P_2I(Q_2a) + rhs_scale * w_2N."""
        return {k: -c for k, c in self.entries.items() if k != ((), self.N)}


def build_recursion_table(N: int) -> RecursionTable:
    _check_n(N)
    entries = {}
    for a in range(N, 0, -1):
        prefixes = [()] if a == N else enumerate_compositions(N - a)
        for I in prefixes:
            # sign (-1)^(N+a): equals (-1)^a for even N, keeps the Q_2N coefficient at +1 for odd N
            entries[(I, a)] = (-1) ** (N + a) * multiplicity(I + (a,))
    scale = Fraction((-1) ** N * factorial(N) * factorial(N - 1) * 4 ** N)
    return RecursionTable(N, entries, scale)


def term_label(I: Composition, a: int) -> str:
    """Human label such as ``P2^2 P4(Q2)``."""
    if not I:
        return f"Q{2 * a}"
    ops = []
    for part, group in itertools.groupby(I):
        k = len(list(group))
        ops.append(f"P{2 * part}" + (f"^{k}" if k > 1 else ""))
    return " ".join(ops) + f"(Q{2 * a})"
