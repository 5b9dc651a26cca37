"""Inductive route: the parity-split elimination matrices and the vector
recursion that produces the gamma chain without any determinant.

Starting from the doubled symbol vector, each level extracts

    gamma_{n+1} = (W(1) + W(2g-n+1)) / (W(2g-n+2) - W(4g-2n+2))

from the current vector W and pushes W through the closed-form inverse-block
product P_k(gamma)^{-1} Q_k with k = 2g-(n+1).  The chain reproduces the
determinant-route ratios exactly and is an independent cross-check of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact.matrix import RatMatrix
from .embedding import CoeffVector, InputError, SymbolVector, embed_omega


class SingularParameterError(ValueError):
    """P_k(m) is singular exactly when m = 0 (for k >= 1)."""


class RecursionBreakdown(RuntimeError):
    """A zero denominator or zero gamma at some level of the recursion.

    Signals a real zero of the underlying exponential polynomial; callers
    fall back to the determinant route, which is total.
    """

    def __init__(self, level: int, reason: str):
        super().__init__(f"recursion breakdown at level {level}: {reason}")
        self.level = level
        self.reason = reason


def _vplus(k: int) -> RatMatrix:
    rows = (k + 3) // 2 if k % 2 == 1 else (k + 2) // 2
    m = RatMatrix.zeros(rows, k + 1)
    for i in range(1, rows + 1):
        m.data[i - 1][i - 1] = Fraction(1)
    top = (k + 1) // 2 if k % 2 == 1 else (k + 2) // 2
    for i in range(2, top + 1):
        m.data[i - 1][k + 3 - i - 1] = Fraction(1)
    return m


def _vminus(k: int) -> RatMatrix:
    rows = (k + 1) // 2 if k % 2 == 1 else (k + 2) // 2
    m = RatMatrix.zeros(rows, k + 1)
    for i in range(1, rows + 1):
        m.data[i - 1][i - 1] = Fraction(1)
    for i in range(2, rows + 1):
        m.data[i - 1][k + 3 - i - 1] = Fraction(-1)
    return m


def build_Pk(k: int, m=Fraction(1)) -> RatMatrix:
    """The square parity-split matrix of size 2k+2 with parameter m.

    P_0 is the 2x2 identity and takes no parameter.
    """
    if k < 0:
        raise InputError("k must be nonnegative")
    if k == 0:
        return RatMatrix.identity(2)
    m = Fraction(m)
    vp, vm = _vplus(k), _vminus(k)
    size = 2 * k + 2
    out = RatMatrix.zeros(size, size)
    for i in range(vp.rows):
        for j in range(k + 1):
            out.data[i][j] = vp.data[i][j]
    for i in range(vm.rows):
        for j in range(k + 1):
            out.data[vp.rows + i][k + 1 + j] = vm.data[i][j]
    base = vp.rows + vm.rows
    for r in range(k):
        out.data[base + r][r + 1] = Fraction(1)
        out.data[base + r][k + 1 + r + 1] = -m
    return out


def build_Qk(k: int) -> RatMatrix:
    """The (2k+2) x (2k+4) companion of P_k: V-blocks with an extra first-unit
    column appended on the right of each, zero band below."""
    if k < 0:
        raise InputError("k must be nonnegative")
    if k == 0:
        return RatMatrix.from_rows([[1, 1, 0, 0], [0, 0, 1, -1]])
    vp, vm = _vplus(k), _vminus(k)
    out = RatMatrix.zeros(2 * k + 2, 2 * k + 4)
    for i in range(vp.rows):
        for j in range(k + 1):
            out.data[i][j] = vp.data[i][j]
    out.data[0][k + 1] = Fraction(1)
    for i in range(vm.rows):
        for j in range(k + 1):
            out.data[vp.rows + i][k + 2 + j] = vm.data[i][j]
    out.data[vp.rows][2 * k + 3] = Fraction(-1)
    return out


def _fold(i: int, k: int) -> tuple:
    """Row pattern of the inverse-block product: column index and upper flag."""
    h = (k + 3) // 2  # ceil((k+2)/2)
    if i <= h:
        return i, True
    return k + 3 - i, False


def pinv_times_q(k: int, m) -> RatMatrix:
    """Closed form of P_k(m)^{-1} Q_k, assembled blockwise in O(k^2).

    Block pattern per row i of the (k+1)-row halves, with j the folded column
    and jj = k+3-j its mirror:

        top    i = 1:   x_1 + x_{k+2}
        top    i >= 2:  (x_j + x_jj)/2 + s*m*(y_j - y_jj)/2
        bottom i = 1:   y_1 - y_{k+2}
        bottom i >= 2:  (x_j + x_jj)/(2m) + s*(y_j - y_jj)/2

    where s = +1 on the upper fold and -1 on the lower, x is the first half
    of the input and y the second.
    """
    m = Fraction(m)
    if m == 0:
        raise SingularParameterError("parameter m must be nonzero")
    half = k + 2
    out = RatMatrix.zeros(2 * k + 2, 2 * k + 4)
    out.data[0][0] = Fraction(1)
    out.data[0][half - 1] = Fraction(1)
    out.data[k + 1][half] = Fraction(1)
    out.data[k + 1][2 * half - 1] = Fraction(-1)
    for i in range(2, k + 2):
        j, upper = _fold(i, k)
        jj = k + 3 - j
        s = 1 if upper else -1
        top = out.data[i - 1]
        bot = out.data[k + 1 + i - 1]
        top[j - 1] += Fraction(1, 2)
        top[jj - 1] += Fraction(1, 2)
        top[half + j - 1] += s * m / 2
        top[half + jj - 1] += -s * m / 2
        bot[j - 1] += Fraction(1, 2 * m)
        bot[jj - 1] += Fraction(1, 2 * m)
        bot[half + j - 1] += Fraction(s, 2)
        bot[half + jj - 1] += Fraction(-s, 2)
    return out


def apply_pinv_q(k: int, m: Fraction, vec: Sequence) -> list:
    """P_k(m)^{-1} Q_k applied to a vector of length 2k+4, in O(k)."""
    if m == 0:
        raise SingularParameterError("parameter m must be nonzero")
    half = k + 2
    if len(vec) != 2 * half:
        raise InputError(f"expected vector of length {2 * half}, got {len(vec)}")
    x = vec[:half]
    y = vec[half:]
    top = [x[0] + x[half - 1]]
    bot = [y[0] - y[half - 1]]
    for i in range(2, k + 2):
        j, upper = _fold(i, k)
        jj = k + 3 - j
        xs = (x[j - 1] + x[jj - 1]) / 2
        yd = (y[j - 1] - y[jj - 1]) / 2
        s = 1 if upper else -1
        top.append(xs + s * m * yd)
        bot.append(xs / m + s * yd)
    return top + bot


@dataclass(frozen=True)
class OmegaVector:
    """Level-n vector of the recursion; length 4g-2n+2."""

    g: int
    level: int
    entries: tuple

    @staticmethod
    def make(g: int, level: int, entries: Sequence) -> "OmegaVector":
        entries = tuple(Fraction(x) for x in entries)
        expected = 4 * g - 2 * level + 2
        if len(entries) != expected:
            raise InputError(f"level-{level} vector must have length {expected}")
        return OmegaVector(g, level, entries)


@dataclass(frozen=True)
class GammaChain:
    """gamma_1..gamma_2g plus the per-level extraction denominators."""

    gammas: tuple
    denominators: tuple


def omega0(C: SymbolVector) -> OmegaVector:
    """Initial vector: the ascending symbol list (C_{-g}..C_g), doubled."""
    ascending = list(reversed(C.C))
    return OmegaVector.make(C.g, 0, ascending + ascending)


def omega0_omega(c: CoeffVector, t) -> OmegaVector:
    """Initial vector of the shift criterion at sample t > 1.

    Equals omega0(embed_omega(c, t)): both halves run c_0 t^g, c_1 t^{g-1},
    ..., c_g, ..., c_0 t^{-g}.
    """
    return omega0(embed_omega(c, t))


def run_recursion(om0: OmegaVector, g: int) -> tuple:
    """Run the full recursion; returns (GammaChain, final scalar W_2g(1)).

    The final scalar must equal the symbol total sum(C_m); callers use it as
    a terminal consistency check.
    """
    if om0.level != 0 or om0.g != g:
        raise InputError("recursion must start from a level-0 vector")
    w = list(om0.entries)
    gammas = []
    denominators = []
    for n in range(0, 2 * g):
        ln = len(w)  # = 4g - 2n + 2
        num = w[0] + w[2 * g - n]  # W(1) + W(2g-n+1)
        den = w[2 * g - n + 1] - w[ln - 1]  # W(2g-n+2) - W(4g-2n+2)
        if den == 0:
            raise RecursionBreakdown(n + 1, "zero extraction denominator")
        gamma = num / den
        if gamma == 0:
            raise RecursionBreakdown(n + 1, "zero gamma")
        gammas.append(gamma)
        denominators.append(den)
        k = 2 * g - (n + 1)
        w = apply_pinv_q(k, gamma, w)
    return GammaChain(tuple(gammas), tuple(denominators)), w[0]


def delta_from_gammas(chain: GammaChain, odd_scale: Fraction) -> list:
    """delta_n assembled from the gamma chain.

    odd indices:  odd_scale * gamma_1 * prod_{j>=1} gamma_{2j+1}/gamma_{2j}
    even indices: prod_{j>=0} gamma_{2j+2}/gamma_{2j+1}
    """
    gammas = chain.gammas
    if any(gm == 0 for gm in gammas):
        raise SingularParameterError("gamma chain contains a zero entry")
    odd_scale = Fraction(odd_scale)
    out = []
    odd_acc = gammas[0]  # Delta-tilde at n=1
    even_acc = Fraction(1)
    for n in range(1, len(gammas) + 1):
        if n % 2 == 1:
            if n > 1:
                odd_acc *= gammas[n - 1] / gammas[n - 2]
            out.append(odd_scale * odd_acc)
        else:
            even_acc *= gammas[n - 1] / gammas[n - 2]
            out.append(even_acc)
    return out
