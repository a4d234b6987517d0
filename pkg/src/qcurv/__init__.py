"""Exact Q-curvature, GJMS and holographic-coefficient identities on Einstein models."""
from __future__ import annotations

from .checks import CheckResult, VerificationReport, run_check, run_suite
from .compositions import build_recursion_table, enumerate_compositions, multiplicity
from .exact_arith import Poly, RatFunc, fmt_rational, parse_rational
from .families import gjms, p_action, q_curvature, t_action
from .model import EinsteinModel, make_model, volume_series
from .qres import critical_q, holographic, qres_definition, qres_interpolation, v_polynomial
from .series import Series, series_sqrt

__all__ = [
    "CheckResult", "EinsteinModel", "Poly", "RatFunc", "Series", "VerificationReport",
    "build_recursion_table", "critical_q", "enumerate_compositions", "fmt_rational", "gjms",
    "holographic", "make_model", "multiplicity", "p_action", "parse_rational", "q_curvature",
    "qres_definition", "qres_interpolation", "run_check", "run_suite", "series_sqrt", "t_action",
    "v_polynomial", "volume_series",
]
