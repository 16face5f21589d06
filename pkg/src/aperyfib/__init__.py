"""Exact telescoping series for Fibonacci and Lucas numbers, with certification."""

from .exactnum import BigRat, QuadRat, qr_sign, qr_to_decimal
from .identities import IdentityCheck
from .lucas import KERNEL, IndexBoundError, LucasPair, alpha_pow, binet_roundtrip, fib_lucas
from .series import (
    ConvergenceReport,
    SeriesSpec,
    SpecError,
    b_value,
    certify,
    closed_form,
    direct_term,
    gap,
    generic_apery_check,
    partial_sum,
    spec_validate,
)

__version__ = "0.1.0"

__all__ = [
    "BigRat",
    "QuadRat",
    "qr_sign",
    "qr_to_decimal",
    "IdentityCheck",
    "KERNEL",
    "IndexBoundError",
    "LucasPair",
    "alpha_pow",
    "binet_roundtrip",
    "fib_lucas",
    "ConvergenceReport",
    "SeriesSpec",
    "SpecError",
    "b_value",
    "certify",
    "closed_form",
    "direct_term",
    "gap",
    "generic_apery_check",
    "partial_sum",
    "spec_validate",
]
