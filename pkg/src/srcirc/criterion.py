"""Determinant route: banded Toeplitz determinant ratios and verdicts.

For a symbol vector C the two lower-triangular Toeplitz matrices E+ and E-
are combined with the top-left antidiagonal block J_n, and the ratios

    Delta_n = det(E+ + E- J_n) / det(E+ - E- J_n),   Delta_0 = 1,

decide where the roots of the underlying self-reciprocal polynomial sit:
all roots are simple and on the unit circle iff every delta_n (Delta_n with
an odd-index scale factor) is finite and strictly positive, and they all lie
on the circle iff the same holds for the shift-embedded delta_n(t) at every
t > 1.  Because the last 2g+1-n columns of E+ +- E-J_n are untouched upper
columns of E+, each determinant reduces to size n:

    det(E+ +- E- J_n) = C_{-g}^(2g+1-n) * det(top-left n x n block),

which is what the implementation computes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact.matrix import RatMatrix, det_int_rows
from .exact.rational import ExtRational, INDETERMINATE
from .embedding import (
    CoeffVector,
    DEFAULT_LOG_SCALE,
    InputError,
    LogScale,
    SymbolVector,
    embed_omega,
    embed_simple,
)

# Classification labels shared across the package.
SIMPLE_ON_CIRCLE = "SimpleOnCircle"
ON_CIRCLE_NOT_SIMPLE = "OnCircleNotSimple"
OFF_CIRCLE = "OffCircle"
DEGENERATE = "Degenerate"

#: Default sample grid for the shift criterion: failures concentrate near
#: t = 1, while 2 and 4 probe the far end cheaply.
DEFAULT_GRID = tuple(
    [Fraction(2), Fraction(4)] + [1 + Fraction(1, 2 ** k) for k in range(1, 11)]
)


def build_E_plus_minus(C: SymbolVector) -> tuple:
    """The pair (E+, E-) of size 2g+1 lower-triangular Toeplitz matrices."""
    size = 2 * C.g + 1
    eplus = RatMatrix.zeros(size, size)
    eminus = RatMatrix.zeros(size, size)
    for i in range(size):
        for j in range(i + 1):
            eplus.data[i][j] = C.at(i - j - C.g)
            eminus.data[i][j] = C.at(C.g - (i - j))
    return eplus, eminus


def build_Jn(n: int, size: int) -> RatMatrix:
    """Size x size matrix with the n x n antidiagonal block top-left."""
    if not 1 <= n <= size:
        raise InputError(f"antidiagonal block size {n} out of range for size {size}")
    m = RatMatrix.zeros(size, size)
    for i in range(n):
        m.data[i][n - 1 - i] = Fraction(1)
    return m


def det_pair(C: SymbolVector, n: int) -> tuple:
    """(det(E+ + E-J_n), det(E+ - E-J_n)) via the size-n corner reduction."""
    g = C.g
    if not 1 <= n <= 2 * g:
        raise InputError(f"index n={n} outside 1..{2 * g}")
    at = C.at
    dets = []
    for sign in (1, -1):
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                row.append(at(i - j - g) + sign * at(g + n + 1 - i - j))
            rows.append(row)
        dets.append(_det_fraction_rows(rows))
    scale = C.at(-g) ** (2 * g + 1 - n)
    return dets[0] * scale, dets[1] * scale


def _det_fraction_rows(rows: list) -> Fraction:
    from math import lcm

    scale = 1
    lifted = []
    for row in rows:
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        scale *= den
        lifted.append([int(x * den) for x in row])
    return Fraction(det_int_rows(lifted), scale)


def capital_delta(C: SymbolVector, n: int) -> ExtRational:
    """Delta_n as an extended rational (infinite when det- vanishes)."""
    dp, dm = det_pair(C, n)
    return ExtRational.from_ratio(dp, dm)


def gamma_from_delta(C: SymbolVector, n: int) -> ExtRational:
    """gamma_n = Delta_{n-1} * Delta_n with Delta_0 = 1."""
    if not 1 <= n <= 2 * C.g:
        raise InputError(f"index n={n} outside 1..{2 * C.g}")
    prev = ExtRational.finite(1) if n == 1 else capital_delta(C, n - 1)
    return prev * capital_delta(C, n)


@dataclass(frozen=True)
class DeltaRecord:
    n: int
    det_plus: Fraction
    det_minus: Fraction
    Delta: ExtRational
    delta: ExtRational


@dataclass(frozen=True)
class DeltaReport:
    """Per-index determinant evidence for one embedding of one polynomial."""

    g: int
    provenance: str
    records: tuple

    def deltas(self) -> list:
        return [r.delta for r in self.records]

    def all_positive_finite(self) -> bool:
        return all(r.delta.is_positive_finite() for r in self.records)

    def first_failing_n(self) -> Optional[int]:
        for r in self.records:
            if not r.delta.is_positive_finite():
                return r.n
        return None

    def has_indeterminate(self) -> bool:
        return any(r.delta.is_indeterminate for r in self.records)

    def zero_pattern(self) -> tuple:
        """Which determinants vanish: tuples (n, '+'/'-')."""
        out = []
        for r in self.records:
            if r.det_plus == 0:
                out.append((r.n, "+"))
            if r.det_minus == 0:
                out.append((r.n, "-"))
        return tuple(out)

    def gammas(self) -> list:
        """gamma_n = Delta_{n-1} Delta_n computed from the stored records."""
        out = []
        prev = ExtRational.finite(1)
        for r in self.records:
            out.append(prev * r.Delta)
            prev = r.Delta
        return out


def _report(C: SymbolVector, odd_factor: Fraction, provenance: str) -> DeltaReport:
    records = []
    for n in range(1, 2 * C.g + 1):
        dp, dm = det_pair(C, n)
        Delta = ExtRational.from_ratio(dp, dm)
        delta = Delta * odd_factor if n % 2 == 1 else Delta
        records.append(DeltaRecord(n, dp, dm, Delta, delta))
    return DeltaReport(C.g, provenance, tuple(records))


def delta_simple(c: CoeffVector, L=DEFAULT_LOG_SCALE) -> DeltaReport:
    """delta_n(c) for n = 1..2g via the simple-roots embedding at scale L."""
    scale = L if isinstance(L, LogScale) else LogScale.make(L)
    C = embed_simple(c, scale)
    return _report(C, c.g * scale.L, C.provenance)


def delta_omega(c: CoeffVector, t) -> DeltaReport:
    """delta_n(c; t) sampled at rational t > 1 via the shift embedding."""
    t = Fraction(t)
    C = embed_omega(c, t)
    odd = (t ** c.g - t ** (-c.g)) / (t ** c.g + t ** (-c.g))
    return _report(C, odd, C.provenance)


def hb_check(C: SymbolVector) -> bool:
    """True iff 0 < Delta_n < infinity for every n (no upper/real zeros)."""
    for n in range(1, 2 * C.g + 1):
        if not capital_delta(C, n).is_positive_finite():
            return False
    return True


@dataclass(frozen=True)
class Verdict:
    """Classification outcome plus the delta evidence that produced it.

    `klass` is one of the four labels above, or None for a bare grid check
    that stayed consistent with the on-circle hypothesis.  `certified` is
    only set by the certification route.
    """

    klass: Optional[str]
    witness: Optional[tuple] = None  # (n,) or (n, t) or (reason,)
    report: Optional[DeltaReport] = None
    grid_reports: tuple = ()
    certified: bool = False
    note: str = ""
    oracle: Optional[object] = None  # OracleEvidence when the oracle ran

    @property
    def passed_simple(self) -> bool:
        return self.klass == SIMPLE_ON_CIRCLE


def verdict_on_circle_sampled(c: CoeffVector, grid: Sequence = DEFAULT_GRID) -> Verdict:
    """Necessary on-circle check on a finite sample grid.

    Any sampled delta_n(c; t) outside (0, inf) disproves the on-circle
    hypothesis with witness (n, t); a full pass is only "consistent with
    on-circle" and comes back with klass None.
    """
    grid = tuple(Fraction(t) for t in grid)
    if not grid:
        raise InputError("sample grid must be nonempty")
    if any(t <= 1 for t in grid):
        raise InputError("sample grid points must satisfy t > 1")
    reports = []
    for t in grid:
        rep = delta_omega(c, t)
        reports.append(rep)
        bad = rep.first_failing_n()
        if bad is not None:
            if rep.has_indeterminate() and rep.records[bad - 1].delta.is_indeterminate:
                return Verdict(DEGENERATE, (bad, t), rep, tuple(reports),
                               note="indeterminate 0/0 determinant ratio at sample")
            return Verdict(OFF_CIRCLE, (bad, t), rep, tuple(reports))
    return Verdict(None, None, None, tuple(reports), note="grid pass: consistent with on-circle")


def verdict_simple(c: CoeffVector, L=DEFAULT_LOG_SCALE, grid: Sequence = DEFAULT_GRID,
                   refine: bool = True) -> Verdict:
    """Simple-roots verdict from the determinant criterion.

    Passes iff every delta_n is finite and strictly positive.  On failure the
    sampled shift grid splits off-circle from on-circle-with-multiplicity;
    the latter stays uncertified here (the certify module upgrades it).
    With refine=False the failure comes back unclassified (klass None).
    """
    rep = delta_simple(c, L)
    if rep.all_positive_finite():
        return Verdict(SIMPLE_ON_CIRCLE, None, rep)
    bad = rep.first_failing_n()
    if rep.records[bad - 1].delta.is_indeterminate:
        return Verdict(DEGENERATE, (bad,), rep, note="indeterminate 0/0 determinant ratio")
    if not refine:
        return Verdict(None, (bad,), rep, note="simple criterion failed; not refined")
    sampled = verdict_on_circle_sampled(c, grid)
    if sampled.klass == OFF_CIRCLE:
        return Verdict(OFF_CIRCLE, sampled.witness, rep, sampled.grid_reports)
    if sampled.klass == DEGENERATE:
        return Verdict(DEGENERATE, sampled.witness, rep, sampled.grid_reports, note=sampled.note)
    return Verdict(ON_CIRCLE_NOT_SIMPLE, (bad,), rep, sampled.grid_reports,
                   note="grid pass only; not certified")
