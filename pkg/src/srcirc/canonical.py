"""Step Hamiltonians, their transfer-matrix solutions, the reproducing
kernel, and exact reconstruction of the polynomial from the step values.

The Hamiltonian attached to a degree-2g self-reciprocal polynomial is the
diagonal step function H(a) = diag(gamma(a)^{-1}, gamma(a)) with 2g steps,
gamma_n = Delta_{n-1} Delta_n.  Points on the domain are addressed by
(interval index n, fraction s in [0,1)) rather than by the irrational
breakpoints themselves.

The solution pair (A(a,z), B(a,z)) is evaluated by the closed-form product
of rotation-like factors [[cos th, -g sin th], [sin th / g, cos th]]; the
differential system itself only appears as a finite-difference residual
check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .criterion import delta_simple
from .embedding import CoeffVector, DEFAULT_LOG_SCALE, InputError, LogScale
from .exact import polys


class NotConstructible(ValueError):
    """Some Delta_n vanished or blew up: no step Hamiltonian exists."""

    def __init__(self, n: int):
        super().__init__(f"degenerate determinant ratio at n={n}; no step Hamiltonian")
        self.n = n


class StencilError(ValueError):
    """Finite-difference stencil crossed an interval breakpoint."""


class ReconstructionError(ArithmeticError):
    """Imaginary terms failed to cancel in the reconstruction product."""


class SingularStepError(ValueError):
    def __init__(self):
        super().__init__("step values must be nonzero")


@dataclass(frozen=True)
class StepHamiltonian:
    """2g-step Hamiltonian: gamma(a) = gamma_n on the n-th half-power interval."""

    g: int
    L: Fraction
    steps: tuple  # ((n, gamma_n), ...) for n = 1..2g
    e_zero: Fraction  # boundary value E(0) = P(1)

    def gamma(self, n: int) -> Fraction:
        if not 1 <= n <= 2 * self.g:
            raise InputError(f"interval index {n} outside 1..{2 * self.g}")
        return self.steps[n - 1][1]

    def positive_definite(self) -> bool:
        return all(gm > 0 for _, gm in self.steps)


def hamiltonian(c: CoeffVector, L=DEFAULT_LOG_SCALE) -> StepHamiltonian:
    """Build the step Hamiltonian from the determinant ratios."""
    scale = L if isinstance(L, LogScale) else LogScale.make(L)
    report = delta_simple(c, scale)
    for rec in report.records:
        if rec.det_plus == 0 or rec.det_minus == 0:
            raise NotConstructible(rec.n)
    steps = []
    prev = Fraction(1)
    for rec in report.records:
        cur = rec.Delta.value
        steps.append((rec.n, prev * cur))
        prev = cur
    return StepHamiltonian(c.g, scale.L, tuple(steps), c.value_at_one())


def _factor(theta: complex, gamma: float) -> tuple:
    ct = cmath.cos(theta)
    st = cmath.sin(theta)
    return (ct, -gamma * st, st / gamma, ct)


def _mat_mul(a: tuple, b: tuple) -> tuple:
    return (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )


def transfer_product(H: StepHamiltonian, n: int, s: float, z: complex) -> tuple:
    """Product of rotation factors from the point (n, s) out to the right end.

    Returns a flat (m11, m12, m21, m22) with determinant 1; the first factor
    covers the remaining (1-s) portion of interval n at angle z(1-s)L/2, the
    rest are full half-steps at angle zL/2.
    """
    if not 1 <= n <= 2 * H.g:
        raise InputError(f"interval index {n} outside 1..{2 * H.g}")
    if not 0 <= s < 1:
        raise InputError("fraction s must lie in [0, 1)")
    L = float(H.L)
    m = _factor(z * (1 - s) * L / 2, float(H.gamma(n)))
    for k in range(n + 1, 2 * H.g + 1):
        m = _mat_mul(m, _factor(z * L / 2, float(H.gamma(k))))
    return m


def eval_AB(H: StepHamiltonian, z: complex, n: int = 1, s: float = 0.0) -> tuple:
    """(A(a,z), B(a,z)) at the point a = q^{(n-1+s)/2}."""
    m = transfer_product(H, n, s, z)
    e0 = float(H.e_zero)
    return (e0 * m[0], e0 * m[2])


def kernel_K(H: StepHamiltonian, n: int, s: float, z: complex, w: complex) -> complex:
    """Reproducing kernel (conj(A(w)) B(z) - conj(B(w)) A(z)) / (pi (z - conj w))."""
    denom = z - w.conjugate()
    if denom == 0:
        raise ZeroDivisionError("kernel pole at z = conj(w)")
    az, bz = eval_AB(H, z, n, s)
    aw, bw = eval_AB(H, w, n, s)
    return (aw.conjugate() * bz - bw.conjugate() * az) / (math.pi * denom)


def ode_residual(H: StepHamiltonian, z: complex, n: int, s: float, h: float) -> tuple:
    """Central-difference defect of -a d/da (A,B) = z [[0,-g],[1/g,0]] (A,B).

    With a = q^{(n-1+s)/2} the left side is -(2/L) d/ds, so the residual of a
    second-order stencil at step h decays like h^2 strictly inside interval n.
    """
    if not (0 < s - h and s + h < 1):
        raise StencilError("stencil (s-h, s+h) must stay inside the interval")
    L = float(H.L)
    gamma = float(H.gamma(n))
    ap, bp = eval_AB(H, z, n, s + h)
    am, bm = eval_AB(H, z, n, s - h)
    a0, b0 = eval_AB(H, z, n, s)
    dA = -(2.0 / L) * (ap - am) / (2 * h)
    dB = -(2.0 / L) * (bp - bm) / (2 * h)
    return (abs(dA - z * (-gamma) * b0), abs(dB - z * (1.0 / gamma) * a0))


def _cpoly_mul(a: tuple, b: tuple) -> tuple:
    """Multiply two complex polynomials stored as (re, im) Fraction lists."""
    are, aim = a
    bre, bim = b
    re = polys.psub(polys.pmul(are, bre), polys.pmul(aim, bim))
    im = polys.padd(polys.pmul(are, bim), polys.pmul(aim, bre))
    return re, im


def _cmat_mul(a: list, b: list) -> list:
    out = []
    for i in range(2):
        row = []
        for j in range(2):
            acc = ([], [])
            for k in range(2):
                prod = _cpoly_mul(a[i][k], b[k][j])
                acc = (polys.padd(acc[0], prod[0]), polys.padd(acc[1], prod[1]))
            row.append(acc)
        out.append(row)
    return out


def reconstruct_polynomial(gammas: Sequence, p_one) -> CoeffVector:
    """Rebuild the polynomial from its 2g step values and its value at 1.

    Expands  (P(1)/2^{2g}) [1 0] prod_n [[x+1, i g_n (x-1)], [-i (x-1)/g_n, x+1]] [1 0]^T
    over exact rational polynomials, treating i as a formal square root that
    must cancel; any surviving imaginary term is an internal inconsistency.
    """
    gammas = [Fraction(gm) for gm in gammas]
    if len(gammas) % 2 == 1:
        raise InputError("need an even count 2g of step values")
    if any(gm == 0 for gm in gammas):
        raise SingularStepError()
    p_one = Fraction(p_one)
    xp1 = [Fraction(1), Fraction(1)]  # x + 1
    xm1 = [Fraction(-1), Fraction(1)]  # x - 1

    def factor(gm: Fraction) -> list:
        return [
            [(xp1, []), ([], polys.pscale(xm1, gm))],
            [([], polys.pscale(xm1, -1 / gm)), (xp1, [])],
        ]

    prod = factor(gammas[0])
    for gm in gammas[1:]:
        prod = _cmat_mul(prod, factor(gm))
    re, im = prod[0][0]
    if im:
        raise ReconstructionError("imaginary part of the reconstruction product is nonzero")
    g = len(gammas) // 2
    coeffs = polys.pscale(re, p_one / Fraction(4) ** g)
    coeffs = coeffs + [Fraction(0)] * (2 * g + 1 - len(coeffs))
    if any(coeffs[k] != coeffs[2 * g - k] for k in range(g)):
        raise ReconstructionError("reconstruction product is not self-reciprocal")
    return CoeffVector.make([coeffs[2 * g - k] for k in range(g + 1)])
