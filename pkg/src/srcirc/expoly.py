"""Complex-numeric evaluation of the exponential polynomial and its pair.

E(z) = sum_m C_m e^{imzL}; A and B are its even/odd real parts,
A = (E + E#)/2 and B = i(E - E#)/2 with E#(z) = conj(E(conj z)).  The same
functions are also produced straight from the polynomial coefficients via
A(z) = x^{-g} P(x) at x = e^{izL}, which is the consistency check between
the numeric layer and the embeddings.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Union

from .embedding import CoeffVector, DEFAULT_LOG_SCALE, LogScale, SymbolVector

_EXP_LIMIT = 700.0  # exp overflow guard for double precision


class RangeError(OverflowError):
    """The requested point would overflow double-precision exponentials."""


def _scale(L) -> float:
    return float(L.L if isinstance(L, LogScale) else Fraction(L))


def _guard(gL: float, z: complex) -> None:
    if abs(z.imag) * gL > _EXP_LIMIT:
        raise RangeError(f"|Im z| * gL = {abs(z.imag) * gL:.1f} exceeds the double range")


def eval_E(C: SymbolVector, L, z: complex) -> complex:
    """E(z) = sum_m C_m e^{imzL}."""
    Lf = _scale(L)
    _guard(C.g * Lf, z)
    return sum(float(C.at(m)) * cmath.exp(1j * m * z * Lf) for m in range(-C.g, C.g + 1))


def eval_A_B(C: SymbolVector, L, z: complex) -> tuple:
    """(A(z), B(z)): the even and odd real-entire parts of E."""
    Lf = _scale(L)
    _guard(C.g * Lf, z)
    a = complex(float(C.at(0)))
    b = 0j
    for m in range(1, C.g + 1):
        cm = float(C.at(m))
        cmm = float(C.at(-m))
        a += (cmm + cm) * cmath.cos(z * m * Lf)
        b += (cmm - cm) * cmath.sin(z * m * Lf)
    return a, b


def eval_Aq_from_poly(c: CoeffVector, L, z: complex) -> complex:
    """A(z) = x^{-g} P(x) at x = e^{izL}, straight from the coefficients."""
    Lf = _scale(L)
    _guard(2 * c.g * Lf, z)  # Horner's intermediate reaches |x|^(2g)
    x = cmath.exp(1j * z * Lf)
    full = c.full_coefficients()
    acc = 0j
    for coeff in full:
        acc = acc * x + float(coeff)
    return acc * x ** (-c.g)


def eval_E_omega(c: CoeffVector, L, omega: float, z: complex) -> complex:
    """The upward-shifted function A(z + i*omega); omega > 0."""
    if omega <= 0:
        raise ValueError("shift omega must be positive")
    return eval_Aq_from_poly(c, L, z + 1j * omega)


def eval_E_omega_sharp(c: CoeffVector, L, omega: float, z: complex) -> complex:
    """Sharp conjugate of the shifted function: conj(value at conj z)."""
    return eval_E_omega(c, L, omega, z.conjugate()).conjugate()
