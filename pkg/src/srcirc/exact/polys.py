"""Dense univariate polynomial arithmetic over the rationals.

Polynomials are plain lists of Fractions in ascending degree order with a
nonzero leading coefficient; the zero polynomial is the empty list.  These
helpers back the Sturm machinery, the symbolic certificates and the exact
polynomial reconstruction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Poly = list  # list[Fraction], ascending exponents


def ptrim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def pzero(p: Poly) -> bool:
    return not p


def pdegree(p: Poly) -> int:
    if not p:
        raise ValueError("zero polynomial has no degree")
    return len(p) - 1


def padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return ptrim(out)


def psub(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] -= c
    return ptrim(out)


def pscale(p: Poly, s: Fraction) -> Poly:
    if s == 0:
        return []
    return [c * s for c in p]


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return ptrim(out)


def pdivmod(p: Poly, q: Poly) -> tuple:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    qlead = q[-1]
    while r and len(r) >= len(q):
        coeff = r[-1] / qlead
        shift = len(r) - len(q)
        quo[shift] = coeff
        for i, b in enumerate(q):
            r[shift + i] -= coeff * b
        r = ptrim(r)
    return ptrim(quo), r


def pdiv_exact(p: Poly, q: Poly) -> Poly:
    quo, rem = pdivmod(p, q)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quo


def peval(p: Poly, x) -> Fraction:
    acc = 0 * x if p else Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pderiv(p: Poly) -> Poly:
    return ptrim([i * c for i, c in enumerate(p)][1:])


def pprimitive(p: Poly) -> Poly:
    """Scale by a positive rational so coefficients are coprime integers.

    The scale factor is positive, so sign data (for Sturm chains) survives.
    """
    if not p:
        return []
    den = 1
    for c in p:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return [Fraction(v, g) for v in ints]


def pgcd(p: Poly, q: Poly) -> Poly:
    """Monic-free gcd: primitive with positive leading coefficient."""
    a, b = ptrim(p), ptrim(q)
    while b:
        _, r = pdivmod(a, b)
        a, b = b, pprimitive(r) if r else []
    if not a:
        return []
    a = pprimitive(a)
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def psquarefree(p: Poly) -> Poly:
    """The radical p / gcd(p, p'): same distinct roots, all simple."""
    g = pgcd(p, pderiv(p))
    if not g or len(g) == 1:
        return list(p)
    return pdiv_exact(p, g)
