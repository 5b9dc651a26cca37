"""Dense rational matrices with fraction-free exact determinants.

The determinant lifts the matrix to integers by clearing denominators row by
row and then runs two-step Bareiss elimination (Sylvester identity applied to
a 2-row border), so all intermediate values stay integral and no rational
arithmetic happens inside the elimination loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised for shape mismatches and non-square determinant requests."""


@dataclass
class RatMatrix:
    rows: int
    cols: int
    data: list  # row-major list of lists of Fraction

    @staticmethod
    def from_rows(rows: Iterable[Sequence]) -> "RatMatrix":
        data = [[Fraction(x) for x in row] for row in rows]
        if not data:
            raise DimensionError("matrix must have at least one row")
        ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise DimensionError("ragged rows")
        return RatMatrix(len(data), ncols, data)

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix(n, n, [[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "RatMatrix":
        return RatMatrix(rows, cols, [[Fraction(0)] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.data[i][j] = Fraction(value)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = RatMatrix.zeros(self.rows, other.cols)
        for i in range(self.rows):
            arow = self.data[i]
            orow = out.data[i]
            for k in range(self.cols):
                aik = arow[k]
                if aik == 0:
                    continue
                brow = other.data[k]
                for j in range(other.cols):
                    orow[j] += aik * brow[j]
        return out

    def matvec(self, v: Sequence[Fraction]) -> list:
        if self.cols != len(v):
            raise DimensionError("vector length mismatch")
        return [sum(row[j] * v[j] for j in range(self.cols)) for row in self.data]

    def det(self) -> Fraction:
        return det_bareiss(self)


def _int_det_two_step_bareiss(a: list) -> int:
    """Exact determinant of an integer matrix, destroying `a`.

    Two-step Bareiss: each sweep eliminates two columns at once using the
    3x3 bordered-minor form of Sylvester's identity, dividing by the square
    of the pivot from the previous sweep.  Falls back to a single step when
    no row yields a nonsingular 2x2 pivot block.
    """
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    div = 1
    k = 0
    while k < n - 1:
        p = k
        while p < n and a[p][k] == 0:
            p += 1
        if p == n:
            return 0
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        if k == n - 2:
            c0 = akk * a[k + 1][k + 1] - a[k][k + 1] * a[k + 1][k]
            return sign * (c0 // div)
        b = a[k][k + 1]
        r = -1
        for i in range(k + 1, n):
            if akk * a[i][k + 1] - b * a[i][k] != 0:
                r = i
                break
        if r == -1:
            # 2x2 pivot block singular for every candidate row: single step;
            # the next sweep then sees an all-zero column and reports det 0
            for i in range(k + 1, n):
                row_i = a[i]
                row_k = a[k]
                aik = row_i[k]
                for j in range(k + 1, n):
                    row_i[j] = (akk * row_i[j] - aik * row_k[j]) // div
                row_i[k] = 0
            div = akk
            k += 1
            continue
        if r != k + 1:
            a[k + 1], a[r] = a[r], a[k + 1]
            sign = -sign
        row_k = a[k]
        row_k1 = a[k + 1]
        c = row_k1[k]
        d = row_k1[k + 1]
        c0 = akk * d - b * c
        div2 = div * div
        for i in range(k + 2, n):
            row_i = a[i]
            u = row_i[k]
            v = row_i[k + 1]
            for j in range(k + 2, n):
                s = row_k[j]
                t = row_k1[j]
                row_i[j] = (c0 * row_i[j] - v * (akk * t - s * c) + u * (b * t - s * d)) // div2
            row_i[k] = 0
            row_i[k + 1] = 0
        div = c0 // div
        k += 2
    return sign * a[n - 1][n - 1]


def det_bareiss(m: RatMatrix) -> Fraction:
    """Exact determinant via a common-denominator integer lift plus Bareiss."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    scale = 1
    lifted = []
    for row in m.data:
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        scale *= den
        lifted.append([int(x * den) for x in row])
    return Fraction(_int_det_two_step_bareiss(lifted), scale)


def det_int_rows(rows: list) -> int:
    """Determinant of an integer row-major matrix (consumed)."""
    return _int_det_two_step_bareiss(rows)
