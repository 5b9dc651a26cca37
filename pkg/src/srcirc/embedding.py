"""Coefficient vectors and their exponential-polynomial embeddings.

A self-reciprocal polynomial of degree 2g is identified with the vector
(c_0, ..., c_g).  Two embeddings turn it into the symbol vector
(C_g, ..., C_{-g}) driving the determinant criteria:

* the simple-roots embedding  C_m = c_{g-m}(1 - mL), C_{-m} = c_{g-m}(1 + mL)
  with L a positive rational scale, and
* the shift embedding         C_m = c_{g-m} t^{-m},  C_{-m} = c_{g-m} t^m
  with t > 1 rational, or t symbolic for the certified route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exact.laurent import LaurentPoly


class InputError(ValueError):
    """Invalid polynomial or embedding data."""


DEFAULT_LOG_SCALE = Fraction(2)


@dataclass(frozen=True)
class CoeffVector:
    """(c_0, ..., c_g) with c_0 != 0: a self-reciprocal polynomial of degree 2g."""

    g: int
    c: tuple

    @staticmethod
    def make(coeffs: Sequence) -> "CoeffVector":
        c = tuple(Fraction(x) for x in coeffs)
        if len(c) < 2:
            raise InputError("need at least (c_0, c_1), i.e. degree >= 2")
        if c[0] == 0:
            raise InputError("leading coefficient c_0 must be nonzero")
        return CoeffVector(len(c) - 1, c)

    def full_coefficients(self) -> list:
        """Descending coefficients of P(x) = sum c_k (x^{2g-k} + x^k) + c_g x^g."""
        return list(self.c) + list(reversed(self.c[:-1]))

    def value_at_one(self) -> Fraction:
        return 2 * sum(self.c[:-1]) + self.c[-1]

    def derivative_coefficients(self) -> list:
        """Descending coefficients of P'(x)."""
        full = self.full_coefficients()
        n = len(full) - 1
        return [full[i] * (n - i) for i in range(n)]


@dataclass(frozen=True)
class LogScale:
    """A positive rational standing in for log q."""

    L: Fraction

    @staticmethod
    def make(value) -> "LogScale":
        L = Fraction(value)
        if L <= 0:
            raise InputError("log scale must be positive")
        return LogScale(L)

    def check_against(self, g: int) -> None:
        # L = 1/m would zero an embedded endpoint coefficient
        for m in range(1, g + 1):
            if self.L * m == 1:
                raise InputError(f"log scale {self.L} collides with 1/{m} for degree 2*{g}")


@dataclass(frozen=True)
class SymbolVector:
    """(C_g, ..., C_{-g}) with nonzero endpoints, stored by descending index."""

    g: int
    C: tuple
    provenance: str = "direct"

    @staticmethod
    def make(entries: Sequence, provenance: str = "direct") -> "SymbolVector":
        C = tuple(Fraction(x) for x in entries)
        if len(C) % 2 == 0 or len(C) < 3:
            raise InputError("symbol vector must have odd length 2g+1 >= 3")
        if C[0] == 0 or C[-1] == 0:
            raise InputError("endpoint symbols C_g and C_{-g} must be nonzero")
        return SymbolVector((len(C) - 1) // 2, C, provenance)

    def at(self, m: int) -> Fraction:
        """C_m for -g <= m <= g; zero outside the window."""
        if abs(m) > self.g:
            return Fraction(0)
        return self.C[self.g - m]

    def reversed_sharp(self) -> "SymbolVector":
        """Index reversal C_m -> C_{-m} (the sharp-conjugate symbol)."""
        return SymbolVector(self.g, tuple(reversed(self.C)), self.provenance + "#")

    def total(self) -> Fraction:
        return sum(self.C)


@dataclass(frozen=True)
class SymbolicSymbolVector:
    """Shift embedding with the scale left as an indeterminate t."""

    g: int
    C: tuple  # of LaurentPoly, descending index m = g..-g

    def at(self, m: int) -> LaurentPoly:
        if abs(m) > self.g:
            return LaurentPoly.make(0, [])
        return self.C[self.g - m]

    def eval(self, t: Fraction) -> SymbolVector:
        return SymbolVector.make([p.eval(Fraction(t)) for p in self.C], provenance=f"omega(t={t})")


def embed_simple(c: CoeffVector, L: Union[LogScale, Fraction, int, str]) -> SymbolVector:
    """Symbol vector for the simple-roots criterion at log scale L."""
    scale = L if isinstance(L, LogScale) else LogScale.make(L)
    scale.check_against(c.g)
    g, Lv = c.g, scale.L
    entries = []
    for m in range(g, -1, -1):
        entries.append(c.c[g - m] * (1 - m * Lv))
    for m in range(1, g + 1):
        entries.append(c.c[g - m] * (1 + m * Lv))
    return SymbolVector.make(entries, provenance=f"simple(L={Lv})")


def embed_omega(c: CoeffVector, t) -> SymbolVector:
    """Symbol vector for the shift criterion sampled at rational t > 1."""
    t = Fraction(t)
    if t <= 1:
        raise InputError("shift sample point must satisfy t > 1")
    g = c.g
    entries = [c.c[g - m] * t ** (-m) for m in range(g, -1, -1)]
    entries += [c.c[g - m] * t ** m for m in range(1, g + 1)]
    return SymbolVector.make(entries, provenance=f"omega(t={t})")


def embed_omega_symbolic(c: CoeffVector) -> SymbolicSymbolVector:
    """Shift embedding with monomial entries c_{g-m} t^{-+m}."""
    g = c.g
    entries = [LaurentPoly.term(c.c[g - m], -m) for m in range(g, -1, -1)]
    entries += [LaurentPoly.term(c.c[g - m], m) for m in range(1, g + 1)]
    return SymbolicSymbolVector(g, tuple(entries))
