"""Exact rational scalars: parsing, formatting, and ratios extended by infinity.

Every criterion quantity in this package is a ratio of exact integer
determinants, so the scalar type is `fractions.Fraction` throughout.  A ratio
with vanishing denominator is represented by `ExtRational`, which keeps the
distinction between an honest (unsigned) infinity and the indeterminate 0/0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction

_FINITE = "finite"
_INF = "inf"
_NAN = "indeterminate"


def parse_rational(text: str) -> Fraction:
    """Parse a 'p/q' or integer string into a Fraction."""
    return Fraction(text.strip())


def fmt_rational(q: Fraction) -> str:
    """Render a Fraction as 'p/q' (or 'p' when the denominator is 1)."""
    return str(q)


@dataclass(frozen=True)
class ExtRational:
    """A rational number extended by an unsigned infinity and 0/0.

    Infinity only ever arises from a zero denominator under a nonzero
    numerator; 0/0 stays tagged as indeterminate and is never coerced.
    """

    kind: str
    value: Fraction | None = None

    @staticmethod
    def finite(q: Union[int, Fraction]) -> "ExtRational":
        return ExtRational(_FINITE, Fraction(q))

    @staticmethod
    def from_ratio(num: Fraction, den: Fraction) -> "ExtRational":
        if den != 0:
            return ExtRational(_FINITE, Fraction(num, den))
        if num != 0:
            return INFINITY
        return INDETERMINATE

    @property
    def is_finite(self) -> bool:
        return self.kind == _FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind == _INF

    @property
    def is_indeterminate(self) -> bool:
        return self.kind == _NAN

    def is_positive_finite(self) -> bool:
        return self.kind == _FINITE and self.value > 0

    def __mul__(self, other: "ExtRational | int | Fraction") -> "ExtRational":
        if not isinstance(other, ExtRational):
            other = ExtRational.finite(other)
        if self.kind == _NAN or other.kind == _NAN:
            return INDETERMINATE
        if self.kind == _INF or other.kind == _INF:
            # inf * 0 has no consistent value
            for a, b in ((self, other), (other, self)):
                if a.kind == _INF and b.kind == _FINITE and b.value == 0:
                    return INDETERMINATE
            return INFINITY
        return ExtRational(_FINITE, self.value * other.value)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.kind == _FINITE:
            return fmt_rational(self.value)
        return self.kind

    @staticmethod
    def parse(text: str) -> "ExtRational":
        t = text.strip()
        if t == _INF:
            return INFINITY
        if t == _NAN:
            return INDETERMINATE
        return ExtRational.finite(parse_rational(t))


INFINITY = ExtRational(_INF)
INDETERMINATE = ExtRational(_NAN)
