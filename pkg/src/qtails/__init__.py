"""Exact arithmetic for truncated pentagonal number series: partition
counters, bound tables, theorem verifiers and conjecture scanners."""

from .polya import Triple, QuadraticProfile, periodic_profile, r_closed_form, r_series
from .series import CoefficientSeries, QPolynomial
from .verifier import VerificationReport, verify_theorem, verify_triple

__all__ = [
    "CoefficientSeries",
    "QPolynomial",
    "QuadraticProfile",
    "Triple",
    "VerificationReport",
    "periodic_profile",
    "r_closed_form",
    "r_series",
    "verify_theorem",
    "verify_triple",
]
