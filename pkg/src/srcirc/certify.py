"""Certified on-circle test: the sampled shift criterion made exact.

delta_n(c; t) is a rational function of the sample point t, so the
"positive and finite for every t > 1" requirement reduces to real-root
counting: build numerator/denominator polynomials by symbolic Laurent
determinants, then show that neither has a root in (1, oo) and that the
sign at one clean sample point is positive.

Two performance devices keep the corpus-scale runs honest but cheap:

* a lazy exact grid scan runs first; a single sampled delta outside (0, oo)
  already refutes the on-circle hypothesis with a point witness;
* the symbolic determinants are computed by Kronecker substitution: the
  monomial corner matrix is evaluated at t = 2^B for a rigorously large B,
  one integer Bareiss determinant is taken, and the polynomial coefficients
  are read back from centered base-2^B digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Optional, Sequence

from .criterion import DEFAULT_GRID, det_pair
from .embedding import CoeffVector, embed_omega, embed_omega_symbolic
from .exact import intpoly, polys
from .exact.laurent import LaurentPoly, laurent_det
from .exact.rational import ExtRational
from .exact.sturm import count_above_one, isolate_smallest_root

CERTIFIED_ON_T = "CertifiedOnT"
CERTIFIED_FAIL = "CertifiedFail"
INCONCLUSIVE = "Inconclusive"

#: Candidate sign-sample points, tried in order until none is a root of any
#: polynomial in the certificate.
_SAMPLE_POINTS = (Fraction(2), Fraction(3), Fraction(5, 2), Fraction(7, 3))


def symbolic_det_pair(c: CoeffVector, n: int) -> tuple:
    """det(E+ +- E-J_n) over the Laurent ring, via the size-n corner block.

    Reference implementation on LaurentPoly entries; the certificate path
    uses the Kronecker specialization below, which must agree with this.
    """
    sym = embed_omega_symbolic(c)
    g = c.g
    at = sym.at
    dets = []
    for sign in (1, -1):
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                e = at(i - j - g)
                f = at(g + n + 1 - i - j)
                row.append(e + f if sign > 0 else e - f)
            rows.append(row)
        dets.append(laurent_det(rows))
    # scale by C_{-g}^(2g+1-n) = (c_0 t^g)^(2g+1-n)
    power = 2 * g + 1 - n
    scale = LaurentPoly.term(c.c[0] ** power, g * power)
    return dets[0] * scale, dets[1] * scale


def _decode_centered(value: int, bits: int) -> list:
    """Coefficients from a base-2^bits evaluation, centered digits."""
    out = []
    base = 1 << bits
    half = base >> 1
    mask = base - 1
    while value != 0:
        digit = value & mask
        if digit >= half:
            digit -= base
        out.append(digit)
        value = (value - digit) >> bits
    return out


def _kronecker_det_pair(ci: list, g: int, n: int) -> tuple:
    """Integer-coefficient corner determinants det(E+ +- E-J_n) up to a
    common positive monomial factor, as ascending coefficient lists.

    Entries of the corner block, after a uniform t^g scaling:
        c_{g-|i-j-g|} T^{2g-(i-j)}          (i >= j)
      +-c_{g-|g+n+1-i-j|} T^{i+j-n-1}       (i+j >= n+1)
    The matrix is evaluated at T = 2^B with B past the rigorous coefficient
    bound n! 2^n prod_i(row max), so one integer determinant per sign
    recovers the full polynomial.
    """
    cmax = max(abs(v) for v in ci)
    bound = factorial(n) * (2 ** n) * (cmax ** n)
    bits = bound.bit_length() + 2
    rows_plus = []
    rows_minus = []
    for i in range(1, n + 1):
        rp = []
        rm = []
        for j in range(1, n + 1):
            plus = 0
            if i >= j:
                plus = ci[g - abs(i - j - g)] << (bits * (2 * g - (i - j)))
            minus = 0
            m2 = g + n + 1 - i - j
            if i + j >= n + 1 and abs(m2) <= g:
                minus = ci[g - abs(m2)] << (bits * (i + j - n - 1))
            rp.append(plus + minus)
            rm.append(plus - minus)
        rows_plus.append(rp)
        rows_minus.append(rm)
    from .exact.matrix import det_int_rows

    return (
        _decode_centered(det_int_rows(rows_plus), bits),
        _decode_centered(det_int_rows(rows_minus), bits),
    )


def symbolic_delta(c: CoeffVector) -> list:
    """Numerator/denominator pairs of delta_n(c; t), cleared and normalized.

    The odd-index factor (t^g - t^{-g})/(t^g + t^{-g}) is folded in as the
    polynomial factors (t^{2g} - 1) and (t^{2g} + 1) after clearing powers
    of t; each pair is scaled by one common positive rational (the content
    of the denominator), so the ratio stays exactly delta_n(c; t).
    """
    g = c.g
    lam = 1
    for x in c.c:
        lam = lam * x.denominator // gcd(lam, x.denominator)
    ci = [int(x * lam) for x in c.c]
    odd_num = [-1] + [0] * (2 * g - 1) + [1]  # t^{2g} - 1
    odd_den = [1] + [0] * (2 * g - 1) + [1]  # t^{2g} + 1
    out = []
    for n in range(1, 2 * g + 1):
        dp, dm = _kronecker_det_pair(ci, g, n)
        dp = [Fraction(v) for v in dp]
        dm = [Fraction(v) for v in dm]
        if n % 2 == 1:
            dp = polys.pmul(dp, [Fraction(v) for v in odd_num])
            dm = polys.pmul(dm, [Fraction(v) for v in odd_den])
        if not dm:
            out.append((LaurentPoly.make(0, dp), LaurentPoly.make(0, [])))
            continue
        prim = polys.pprimitive(dm)
        idx = next(i for i, v in enumerate(prim) if v != 0)
        factor = prim[idx] / dm[idx]
        num = LaurentPoly.make(0, polys.pscale(dp, factor))
        den = LaurentPoly.make(0, prim)
        # clear the common power of t (both scaled by the same monomial)
        shift = min(num.low if not num.is_zero else den.low, den.low)
        out.append((num.shift(-shift), den.shift(-shift)))
    return out


@dataclass(frozen=True)
class CertRecord:
    n: int
    num: LaurentPoly
    den: LaurentPoly
    num_roots: Optional[int]
    den_roots: Optional[int]
    sample_sign: Optional[int]


@dataclass(frozen=True)
class SignCertificate:
    verdict: str
    witness_n: Optional[int] = None
    witness_interval: Optional[tuple] = None  # rational (a, b), possibly a == b
    records: tuple = ()
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == CERTIFIED_ON_T


def _grid_refutation(c: CoeffVector, grid: Sequence) -> Optional[SignCertificate]:
    """Exact point witnesses: one sampled delta outside (0, oo) refutes.

    Evaluates lazily, n by n per grid point, and stops at the first failure.
    """
    g = c.g
    for t in grid:
        t = Fraction(t)
        C = embed_omega(c, t)
        odd = (t ** g - t ** (-g)) / (t ** g + t ** (-g))
        for n in range(1, 2 * g + 1):
            dp, dm = det_pair(C, n)
            delta = ExtRational.from_ratio(dp, dm)
            if n % 2 == 1:
                delta = delta * odd
            if not delta.is_positive_finite():
                return SignCertificate(
                    CERTIFIED_FAIL,
                    witness_n=n,
                    witness_interval=(t, t),
                    reason=f"delta_{n}({t}) = {delta}",
                )
    return None


def _pick_sample_point(pairs: list) -> Optional[Fraction]:
    for pt in _SAMPLE_POINTS:
        if all(
            (num.is_zero or num.eval(pt) != 0) and (den.is_zero or den.eval(pt) != 0)
            for num, den in pairs
        ):
            return pt
    return None


def certify_on_circle(c: CoeffVector, grid: Sequence = DEFAULT_GRID) -> SignCertificate:
    """Decide "all roots on the unit circle" with an exact certificate.

    CertifiedOnT requires, for every n: no denominator root in (1, oo), no
    numerator root in (1, oo), and positive sign at the sample point; any
    root or bad sign yields CertifiedFail with an isolating rational
    interval (a point interval when the witness is an exact sample).
    """
    early = _grid_refutation(c, grid)
    if early is not None:
        return early
    pairs = symbolic_delta(c)
    for n, (num, den) in enumerate(pairs, start=1):
        if den.is_zero:
            return SignCertificate(INCONCLUSIVE, witness_n=n,
                                   reason="identically zero denominator")
        if num.is_zero:
            return SignCertificate(CERTIFIED_FAIL, witness_n=n,
                                   witness_interval=(Fraction(2), Fraction(2)),
                                   reason="identically zero numerator")
    sample = _pick_sample_point(pairs)
    if sample is None:
        return SignCertificate(INCONCLUSIVE, reason="no clean sample point available")
    records = []
    for n, (num, den) in enumerate(pairs, start=1):
        den_roots = count_above_one(den)
        if den_roots > 0:
            a, b = isolate_smallest_root(den, Fraction(1))
            return SignCertificate(CERTIFIED_FAIL, witness_n=n, witness_interval=(a, b),
                                   records=tuple(records),
                                   reason=f"denominator of delta_{n} vanishes in (1, oo)")
        num_roots = count_above_one(num)
        if num_roots > 0:
            a, b = isolate_smallest_root(num, Fraction(1))
            return SignCertificate(CERTIFIED_FAIL, witness_n=n, witness_interval=(a, b),
                                   records=tuple(records),
                                   reason=f"delta_{n} vanishes in (1, oo)")
        value = num.eval(sample) / den.eval(sample)
        sign = 1 if value > 0 else (-1 if value < 0 else 0)
        records.append(CertRecord(n, num, den, num_roots, den_roots, sign))
        if sign <= 0:
            return SignCertificate(CERTIFIED_FAIL, witness_n=n,
                                   witness_interval=(sample, sample),
                                   records=tuple(records),
                                   reason=f"delta_{n}({sample}) <= 0 on all of (1, oo)")
    return SignCertificate(CERTIFIED_ON_T, records=tuple(records))
