"""Independent verification: numeric root finding and the classical
nested-determinant stability chain.

The root finder is an Aberth-Ehrlich simultaneous iteration with
deterministic seeding on a fixed annulus; residuals are measured against the
evaluation scale sum |a_k| max(1,|z|)^k, the quantity double precision can
actually drive to the backward-error floor.  The determinant chain is run on
the derivative polynomial and cross-checks the circle classification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .criterion import (
    DEGENERATE,
    OFF_CIRCLE,
    ON_CIRCLE_NOT_SIMPLE,
    SIMPLE_ON_CIRCLE,
    Verdict,
)
from .embedding import CoeffVector, InputError
from .exact.matrix import RatMatrix

ALL_SIMPLE_ON_T = "AllSimpleOnT"
ON_T_WITH_MULTIPLE = "OnTWithMultiple"
OFF_T = "OffT"
UNCERTAIN = "Uncertain"

TOL_INNER = 1e-9
TOL_OUTER = 1e-6
CLUSTER_SEP = 1e-6
RESIDUAL_TOL = 1e-10


class OracleFailure(RuntimeError):
    """The root iteration failed to reach the residual target."""


def _eval_and_scale(coeffs: np.ndarray, z: np.ndarray) -> tuple:
    """Horner values of p and the evaluation magnitude sum |a_k| max(1,|z|)^k."""
    p = np.zeros_like(z)
    scale = np.zeros(z.shape, dtype=float)
    az = np.maximum(1.0, np.abs(z))
    for a in coeffs:
        p = p * z + a
        scale = scale * az + abs(a)
    return p, scale


def find_roots(coeffs: Sequence, maxiter: int = 400) -> list:
    """All roots of a real polynomial, with multiplicity, by Aberth iteration.

    Coefficients are descending.  Seeding is deterministic: equally spaced
    angles with a fixed offset on the annulus radius |a_n/a_0|^(1/n).
    """
    a = [float(x) for x in coeffs]
    while a and a[0] == 0.0:
        a.pop(0)
    if len(a) < 2:
        raise InputError("root finding needs degree >= 1 and a nonzero leading coefficient")
    zeros_at_origin = 0
    while a[-1] == 0.0:
        a.pop()
        zeros_at_origin += 1
    n = len(a) - 1
    if n == 0:
        return [0j] * zeros_at_origin
    lead = a[0]
    a = np.array([x / lead for x in a], dtype=float)
    da = a[:-1] * np.arange(n, 0, -1)

    r = abs(a[-1]) ** (1.0 / n)
    angles = 2.0 * np.pi * (np.arange(n) + 0.25) / n + 0.13
    z = r * np.exp(1j * angles)

    ok = False
    for _ in range(maxiter):
        p, scale = _eval_and_scale(a, z)
        if np.all(np.abs(p) <= 1e-13 * scale):
            ok = True
            break
        dp, _ = _eval_and_scale(da, z)
        dp = np.where(dp == 0, 1e-300, dp)
        newton = p / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        s = np.sum(1.0 / diff, axis=1)
        denom = 1.0 - newton * s
        denom = np.where(np.abs(denom) < 1e-300, 1e-300, denom)
        step = newton / denom
        # freeze points that already sit on the residual floor
        settled = np.abs(p) <= 1e-14 * scale
        z = z - np.where(settled, 0.0, step)
    if not ok:
        p, scale = _eval_and_scale(a, z)
        if not np.all(np.abs(p) <= RESIDUAL_TOL * scale):
            raise OracleFailure(
                f"Aberth iteration stalled: worst residual {float(np.max(np.abs(p) / scale)):.3e}"
            )
    return list(z) + [0j] * zeros_at_origin


def scaled_residuals(coeffs: Sequence, roots: Sequence) -> list:
    """|p(root)| / (sum |a_k| max(1,|root|)^k) for each root."""
    a = np.array([float(x) for x in coeffs], dtype=float)
    z = np.array(list(roots), dtype=complex)
    p, scale = _eval_and_scale(a, z)
    return list(np.abs(p) / scale)


def _clusters(roots: list, sep: float) -> list:
    """Union-find grouping of roots closer than `sep`."""
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) <= sep:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


@dataclass(frozen=True)
class RootReport:
    roots: tuple
    deviations: tuple  # | |root| - 1 | per root
    clusters: tuple  # tuples of root indices, one per distinct root
    classification: str

    @property
    def has_multiple(self) -> bool:
        return any(len(c) > 1 for c in self.clusters)


def classify_circle(roots: Sequence, tol_inner: float = TOL_INNER,
                    tol_outer: float = TOL_OUTER) -> RootReport:
    """Classify a root multiset against the unit circle.

    Roots are clustered first (separation <= 1e-6 means one multiple root);
    the circle deviation is measured on cluster means, which recovers full
    accuracy even though individual members of a multiplicity-m cluster only
    carry O(eps^(1/m)) digits.
    """
    roots = [complex(r) for r in roots]
    if not roots:
        raise InputError("empty root list")
    clusters = _clusters(roots, CLUSTER_SEP)
    devs = tuple(abs(abs(r) - 1.0) for r in roots)
    in_band = False
    any_off = False
    for cluster in clusters:
        center = sum(roots[i] for i in cluster) / len(cluster)
        d = abs(abs(center) - 1.0)
        if tol_inner < d < tol_outer:
            in_band = True
        elif d >= tol_outer:
            any_off = True
    if in_band:
        cls = UNCERTAIN
    elif any_off:
        cls = OFF_T
    elif any(len(c) > 1 for c in clusters):
        cls = ON_T_WITH_MULTIPLE
    else:
        cls = ALL_SIMPLE_ON_T
    return RootReport(tuple(roots), devs, tuple(tuple(c) for c in clusters), cls)


@dataclass(frozen=True)
class TakagiChain:
    """Determinants det D_k of the nested resultant blocks, k = 1..deg.

    Empirically pinned convention (validated against the numeric oracle and
    the degree-3 closed forms): all roots lie strictly inside the unit circle
    iff det D_k > 0 for every k.  The source theorem's (-1)^k convention
    belongs to a different row arrangement and does not match its own
    displayed matrices.
    """

    dets: tuple
    passed: bool


def takagi_chain(qpoly: Sequence) -> TakagiChain:
    """Nested-determinant chain of Q against its reversed conjugate.

    Exact over the rationals.  D_n is the 2n x 2n resultant block matrix of
    Q and Q#; D_{k-1} deletes rows and columns k and 2k from D_k.
    """
    a = [Fraction(x) for x in qpoly]
    while a and a[0] == 0:
        a.pop(0)
    if len(a) < 2:
        raise InputError("chain needs degree >= 1")
    n = len(a) - 1
    m = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for r in range(n):
        for k in range(n + 1):
            m[r][r + k] = a[k]
            m[n + r][r + k] = a[n - k]
    dets = [Fraction(0)] * n
    k = n
    while k >= 1:
        dets[k - 1] = RatMatrix.from_rows(m).det()
        drop = {k - 1, 2 * k - 1}
        keep = [i for i in range(2 * k) if i not in drop]
        m = [[m[i][j] for j in keep] for i in keep]
        k -= 1
    return TakagiChain(tuple(dets), all(d > 0 for d in dets))


def _polish_multiple_roots(coeffs: Sequence, roots: list) -> list:
    """Collapse loose clusters onto verified multiple roots.

    A multiplicity-m root comes out of the simultaneous iteration as a loose
    m-star of radius ~eps^(1/m), far beyond the clustering separation for
    m >= 3.  Each loose group is polished by Newton on the (m-1)-th
    derivative and accepted only if p, p', ..., p^(m-1) all vanish to
    1e-10 of their evaluation scales there; a tight bundle of simple roots
    fails that test and is left untouched.
    """
    a = np.array([float(x) for x in coeffs], dtype=float)
    a = a / a[0]
    groups = _clusters(roots, 1e-2)
    out = list(roots)
    for group in groups:
        m = len(group)
        if m < 2:
            continue
        center = sum(roots[i] for i in group) / m
        dm = a.copy()
        for _ in range(m - 1):
            dm = dm[:-1] * np.arange(len(dm) - 1, 0, -1)
        ddm = dm[:-1] * np.arange(len(dm) - 1, 0, -1)
        w = center
        for _ in range(60):
            pv, _ = _eval_and_scale(dm, np.array([w]))
            dv, _ = _eval_and_scale(ddm, np.array([w]))
            if dv[0] == 0:
                break
            step = pv[0] / dv[0]
            w -= step
            if abs(step) <= 1e-15 * max(1.0, abs(w)):
                break
        deriv = a.copy()
        verified = True
        for _ in range(m):
            val, scale = _eval_and_scale(deriv, np.array([w]))
            if abs(val[0]) > 1e-10 * scale[0]:
                verified = False
                break
            deriv = deriv[:-1] * np.arange(len(deriv) - 1, 0, -1)
        if verified:
            for i in group:
                out[i] = w
    return out


@dataclass(frozen=True)
class OracleEvidence:
    root_report: RootReport
    chain: TakagiChain


def verdict_oracle(c: CoeffVector) -> Verdict:
    """Numeric-root verdict with the determinant chain as a cross-check.

    The root finder is authoritative; the chain (on the derivative, which
    must have all roots strictly inside the circle exactly for the simple
    on-circle case) rides along as diagnostic evidence.
    """
    full = c.full_coefficients()
    roots = find_roots(full)
    report = classify_circle(roots)
    if report.classification == UNCERTAIN:
        polished = _polish_multiple_roots(full, list(roots))
        second = classify_circle(polished)
        if second.classification != UNCERTAIN:
            report = second
    chain = takagi_chain(c.derivative_coefficients())
    note = f"takagi_pass={chain.passed}"
    if report.classification == ALL_SIMPLE_ON_T:
        klass = SIMPLE_ON_CIRCLE
    elif report.classification == ON_T_WITH_MULTIPLE:
        klass = ON_CIRCLE_NOT_SIMPLE
    elif report.classification == OFF_T:
        klass = OFF_CIRCLE
    else:
        klass = DEGENERATE
        note += "; oracle uncertain: root deviation inside the tolerance band"
    return Verdict(klass, None, None, note=note, oracle=OracleEvidence(report, chain))
