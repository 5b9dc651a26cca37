"""Sturm-chain root counting and isolation on open intervals.

Used to discharge the "for every scale parameter > 1" quantifier in the
certified on-circle test: a rational function keeps one sign on (1, oo) iff
its numerator and denominator have no roots there.  The heavy lifting runs
over plain integers in `intpoly`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from . import intpoly
from .laurent import LaurentPoly


class ZeroPolynomialError(ValueError):
    """Root counting is undefined for the identically zero polynomial."""


def _as_int_poly(p: Union[LaurentPoly, Sequence]) -> list:
    if isinstance(p, LaurentPoly):
        dense = p.polynomial_part()
    else:
        dense = list(p)
    return intpoly.int_primitive(dense)


def sturm_count(p, lo, hi=None) -> int:
    """Number of distinct real roots in the open interval (lo, hi).

    `hi=None` means +infinity.  Accepts a LaurentPoly, whose polynomial part
    t^N*p is used; this only adds roots at 0, outside any interval with
    lo >= 0 that we ever query.
    """
    ip = _as_int_poly(p)
    if not ip:
        raise ZeroPolynomialError("root count of the zero polynomial")
    return intpoly.count_roots_open(ip, Fraction(lo), None if hi is None else Fraction(hi))


def count_above_one(p) -> int:
    """Root count in (1, oo) with a Descartes shortcut before any Sturm work."""
    ip = _as_int_poly(p)
    if not ip:
        raise ZeroPolynomialError("root count of the zero polynomial")
    fast = intpoly.fast_count_above_one(ip)
    if fast is not None:
        return fast
    return intpoly.count_roots_open(ip, Fraction(1), None)


def isolate_smallest_root(p, lo: Fraction, hi=None, width=Fraction(1, 1024)) -> tuple:
    """Rational interval [a, b] isolating the smallest root of p in (lo, hi).

    Assumes at least one root is present.  Bisects until one distinct root
    remains and the interval is narrower than `width`; a root hit exactly by
    a bisection point comes back as the degenerate interval [root, root].
    """
    ip = _as_int_poly(p)
    lo = Fraction(lo)
    if hi is None:
        hi = lo + 1
        while intpoly.count_roots_open(ip, lo, hi) == 0:
            hi = lo + 2 * (hi - lo)
    else:
        hi = Fraction(hi)
    a, b = lo, hi
    while intpoly.count_roots_open(ip, a, b) > 1 or (b - a) > width:
        mid = (a + b) / 2
        if intpoly.eval_sign_at(ip, mid.numerator, mid.denominator) == 0:
            return mid, mid
        if intpoly.count_roots_open(ip, a, mid) > 0:
            b = mid
        else:
            a = mid
    return a, b
