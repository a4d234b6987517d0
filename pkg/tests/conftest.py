from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from qcurv.exact_arith import Poly

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small, max_size=5).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())

GRID_MODELS = [(8, Fraction(4)), (8, Fraction(-2)), (10, Fraction(5)), (12, Fraction(3, 2)), (14, Fraction(7))]
MUS = [Fraction(0), Fraction(1), Fraction(2), Fraction(7, 3), Fraction(13), Fraction(101, 7)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
