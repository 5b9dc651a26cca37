"""Integer-polynomial kernel behind the root counting.

Sturm chains, Taylor shifts and sign evaluations all run over plain Python
integers here; Fractions only appear at the boundary.  Pseudo-remainders are
taken with an explicitly positive multiplier so that the Sturm sign property
survives, and every chain element is divided by its integer content.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence


def int_primitive(coeffs: Sequence) -> list:
    """Ascending Fraction/int coefficients -> primitive integer list (same signs)."""
    fr = [Fraction(c) for c in coeffs]
    while fr and fr[-1] == 0:
        fr.pop()
    if not fr:
        return []
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return [v // g for v in ints]


def variations(values: Sequence[int]) -> int:
    """Sign changes in a sequence, zeros skipped."""
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def taylor_shift_1(coeffs: Sequence[int]) -> list:
    """Coefficients of p(t+1), ascending, by iterated synthetic division."""
    d = list(reversed([int(c) for c in coeffs]))  # descending
    n = len(d)
    out = []
    for k in range(n):
        for i in range(1, n - k):
            d[i] += d[i - 1]
        out.append(d[n - 1 - k])
    return out


def descartes_positive(coeffs: Sequence[int]) -> int:
    """Descartes bound on the number of positive roots (exact when 0 or 1)."""
    return variations(list(coeffs))


def eval_sign_at(coeffs: Sequence[int], u: int, v: int) -> int:
    """Sign of p(u/v) for v > 0, via the homogeneous integer value."""
    if not coeffs:
        return 0
    acc = coeffs[-1]
    vp = 1
    for k in range(len(coeffs) - 2, -1, -1):
        vp *= v
        acc = acc * u + coeffs[k] * vp
    return (acc > 0) - (acc < 0)


def deriv(coeffs: Sequence[int]) -> list:
    return [k * coeffs[k] for k in range(1, len(coeffs))]


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _content_div(p: list) -> list:
    g = 0
    for v in p:
        g = gcd(g, abs(v))
    return [v // g for v in p] if g > 1 else p


def pseudo_rem_pos(a: list, b: list) -> list:
    """m * (a mod b) for some positive integer multiple m of powers of lc(b)."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    k = 0
    while r and len(r) - 1 >= db:
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, bc in enumerate(b):
            r[shift + i] -= lead * bc
        _trim(r)
        k += 1
    if lb < 0 and k % 2 == 1:
        r = [-x for x in r]
    return r


def int_poly_gcd(a: list, b: list) -> list:
    """Primitive gcd in Z[t] with positive leading coefficient."""
    a, b = _content_div(list(a)), _content_div(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _content_div(pseudo_rem_pos(a, b))
        a, b = b, r
    if a and a[-1] < 0:
        a = [-v for v in a]
    return a


def exact_div(p: list, q: list) -> list:
    """p / q in Q[t] coerced back to a primitive integer polynomial."""
    r = [Fraction(c) for c in p]
    quo = [Fraction(0)] * (len(p) - len(q) + 1)
    qlead = Fraction(q[-1])
    while r and len(r) >= len(q):
        coeff = r[-1] / qlead
        shift = len(r) - len(q)
        quo[shift] = coeff
        for i, bc in enumerate(q):
            r[shift + i] -= coeff * bc
        while r and r[-1] == 0:
            r.pop()
    if any(r):
        raise ArithmeticError("inexact integer-polynomial division")
    return int_primitive(quo)


def squarefree(p: list) -> list:
    g = int_poly_gcd(p, deriv(p))
    if len(g) <= 1:
        return list(p)
    return exact_div(p, g)


def sturm_chain(p: list) -> list:
    chain = [p, deriv(p)]
    while chain[-1]:
        r = pseudo_rem_pos(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_content_div([-v for v in r]))
    return [q for q in chain if q]


def _variations_at(chain: list, u: int, v: int) -> int:
    return variations([eval_sign_at(q, u, v) for q in chain])


def _variations_at_inf(chain: list) -> int:
    return variations([q[-1] for q in chain])


def count_roots_open(p: list, lo: Fraction, hi: Optional[Fraction] = None) -> int:
    """Distinct real roots of p in the open interval (lo, hi), hi=None -> oo.

    Operates on a primitive integer polynomial; endpoint roots are divided
    out first so that the Sturm difference counts the open interval.
    """
    p = _content_div(_trim(list(p)))
    if not p:
        raise ValueError("zero polynomial")
    if len(p) == 1:
        return 0
    p = squarefree(p)
    lo = Fraction(lo)
    if eval_sign_at(p, lo.numerator, lo.denominator) == 0:
        p = exact_div(p, [-lo.numerator, lo.denominator])
    if hi is not None:
        hi = Fraction(hi)
        if hi <= lo:
            return 0
        if eval_sign_at(p, hi.numerator, hi.denominator) == 0:
            p = exact_div(p, [-hi.numerator, hi.denominator])
    if len(p) <= 1:
        return 0
    chain = sturm_chain(p)
    upper = _variations_at_inf(chain) if hi is None else _variations_at(chain, hi.numerator, hi.denominator)
    return _variations_at(chain, lo.numerator, lo.denominator) - upper


def fast_count_above_one(p: list) -> Optional[int]:
    """Root count of p in (1, oo) when Descartes decides it outright.

    Shift to p(t+1) and read the sign variations: 0 or 1 variations pin the
    count exactly (with multiplicity folded); anything else returns None and
    the caller falls back to a Sturm count.
    """
    p = _trim(list(p))
    if not p:
        return None
    v = descartes_positive(taylor_shift_1(p))
    if v <= 1:
        return v
    return None
