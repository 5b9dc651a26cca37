"""Laurent polynomials over the rationals and their exact determinants.

Coefficients are stored densely over a contiguous exponent window, which is
all the symbolic route needs: the indeterminate only ever appears through
monomial matrix entries, so windows stay narrow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrix import DimensionError
from . import polys


@dataclass(frozen=True)
class LaurentPoly:
    """A polynomial in t and 1/t with Fraction coefficients.

    `low` is the exponent of the first stored coefficient; coefficients run
    over ascending exponents and both ends are nonzero unless the polynomial
    is zero (stored as the empty tuple).
    """

    low: int
    coeffs: tuple

    @staticmethod
    def make(low: int, coeffs: Sequence) -> "LaurentPoly":
        cs = [Fraction(c) for c in coeffs]
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        cs = cs[lead:]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            return ZERO
        return LaurentPoly(low + lead, tuple(cs))

    @staticmethod
    def term(coeff, exp: int = 0) -> "LaurentPoly":
        return LaurentPoly.make(exp, [coeff])

    @staticmethod
    def const(value) -> "LaurentPoly":
        return LaurentPoly.make(0, [value])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return self.low + len(self.coeffs) - 1

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [Fraction(0)] * (high - low + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - low + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - low + i] += c
        return LaurentPoly.make(low, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero or other.is_zero:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPoly.make(self.low + other.low, out)

    def scale(self, s) -> "LaurentPoly":
        s = Fraction(s)
        if s == 0 or self.is_zero:
            return ZERO
        return LaurentPoly(self.low, tuple(c * s for c in self.coeffs))

    def shift(self, exp: int) -> "LaurentPoly":
        if self.is_zero:
            return ZERO
        return LaurentPoly(self.low + exp, self.coeffs)

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Division known to be exact in the Laurent ring."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero:
            return ZERO
        quo = polys.pdiv_exact(list(self.coeffs), list(other.coeffs))
        return LaurentPoly.make(self.low - other.low, quo)

    def eval(self, t: Fraction) -> Fraction:
        """Exact evaluation at a nonzero rational point."""
        t = Fraction(t)
        if t == 0:
            raise ZeroDivisionError("Laurent polynomial evaluated at 0")
        acc = polys.peval(list(self.coeffs), t)
        return acc * t ** self.low

    def eval_complex(self, t: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * t + complex(c)
        return acc * t ** self.low

    def polynomial_part(self) -> list:
        """Coefficients of t^N * self with N clearing negative exponents."""
        if self.is_zero:
            return []
        shift = min(self.low, 0)
        return [Fraction(0)] * (self.low - shift) + list(self.coeffs)

    def primitive(self) -> "LaurentPoly":
        """Content-normalized copy (positive scale, exponent shift to 0)."""
        if self.is_zero:
            return ZERO
        return LaurentPoly.make(0, polys.pprimitive(list(self.coeffs)))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.low + i
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{e}")
        return " + ".join(parts)


ZERO = LaurentPoly(0, ())
ONE = LaurentPoly(0, (Fraction(1),))


def laurent_det(grid: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square Laurent-polynomial matrix.

    Fraction-free Bareiss over the ring: every division is by the previous
    pivot and is exact because the intermediate entries are bordered minors.
    """
    a = [list(row) for row in grid]
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionError("laurent_det requires a square matrix")
    if n == 0:
        return ONE
    sign = 1
    div = ONE
    for k in range(n - 1):
        p = k
        while p < n and a[p][k].is_zero:
            p += 1
        if p == n:
            return ZERO
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]).divexact(div)
            a[i][k] = ZERO
        div = pivot
    result = a[n - 1][n - 1]
    return -result if sign < 0 else result
