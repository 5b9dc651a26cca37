"""Exact arithmetic kernel: rationals, matrices, Laurent polynomials, Sturm."""

from .rational import ExtRational, INDETERMINATE, INFINITY, Rational, fmt_rational, parse_rational
from .matrix import DimensionError, RatMatrix, det_bareiss
from .laurent import LaurentPoly, laurent_det
from .sturm import ZeroPolynomialError, isolate_smallest_root, sturm_count

__all__ = [
    "ExtRational",
    "INDETERMINATE",
    "INFINITY",
    "Rational",
    "fmt_rational",
    "parse_rational",
    "DimensionError",
    "RatMatrix",
    "det_bareiss",
    "LaurentPoly",
    "laurent_det",
    "ZeroPolynomialError",
    "isolate_smallest_root",
    "sturm_count",
]
