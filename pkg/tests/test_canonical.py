"""Step Hamiltonians, transfer products, kernel, reconstruction."""

import cmath
import math
import random
from fractions import Fraction as F

import pytest

from srcirc.canonical import (
    NotConstructible,
    ReconstructionError,
    SingularStepError,
    StencilError,
    eval_AB,
    hamiltonian,
    kernel_K,
    ode_residual,
    reconstruct_polynomial,
    transfer_product,
)
from srcirc.criterion import delta_simple
from srcirc.embedding import CoeffVector, embed_simple
from srcirc.expoly import eval_A_B

from conftest import random_int_coeffs


def det2(m):
    return m[0] * m[3] - m[1] * m[2]


class TestHamiltonian:
    def test_g1_steps(self):
        H = hamiltonian(CoeffVector.make([1, 0]), 2)
        assert H.steps == ((1, F(1, 2)), (2, F(1, 2)))
        assert H.e_zero == 2
        assert H.positive_definite()

    def test_positive_for_on_circle(self):
        H = hamiltonian(CoeffVector.make([1, 1, 1]), 2)
        assert H.positive_definite()

    def test_negative_step_off_circle(self):
        H = hamiltonian(CoeffVector.make([1, -3]), 2)
        assert not H.positive_definite()
        assert H.gamma(2) < 0

    def test_degenerate_rejected(self):
        with pytest.raises(NotConstructible) as err:
            hamiltonian(CoeffVector.make([1, 2]), 2)
        assert err.value.n == 2


class TestTransferProduct:
    def test_det_one(self):
        # tolerance is relative to the squared matrix scale: the factors hold
        # cosh-sized entries for complex z, and the cancellation back to 1
        # cannot beat eps * |M|^2 in doubles
        rng = random.Random(31)
        for _ in range(25):
            g = rng.randint(1, 6)
            c = random_int_coeffs(rng, g)
            try:
                H = hamiltonian(c, 2)
            except NotConstructible:
                continue
            z = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
            n = rng.randint(1, 2 * g)
            m = transfer_product(H, n, rng.random(), z)
            scale = max(1.0, max(abs(x) for x in m) ** 2)
            assert abs(det2(m) - 1) < 1e-12 * scale

    def test_final_factor_tends_to_identity(self):
        H = hamiltonian(CoeffVector.make([1, 0]), 2)
        m = transfer_product(H, 2, 1 - 1e-9, 1.5)
        assert abs(m[0] - 1) < 1e-8 and abs(m[1]) < 1e-8
        assert abs(m[2]) < 1e-8 and abs(m[3] - 1) < 1e-8

    def test_closed_form_cosine(self):
        H = hamiltonian(CoeffVector.make([1, 0]), 2)
        for z in (0.3, 1.1 + 0.2j, -2.0 + 1.0j):
            a, b = eval_AB(H, z, 1, 0.0)
            assert abs(a - 2 * cmath.cos(2 * z)) < 1e-10 * max(1, abs(a))


class TestEvalAB:
    def test_z_zero_everywhere(self):
        H = hamiltonian(CoeffVector.make([1, 0]), 2)
        for n in (1, 2):
            for s in (0.0, 0.25, 0.7):
                assert eval_AB(H, 0.0, n, s) == (2.0, 0.0)

    def test_quarter_pi_zero_of_A(self):
        H = hamiltonian(CoeffVector.make([1, 0]), 2)
        a, _ = eval_AB(H, math.pi / 4, 1, 0.0)
        assert abs(a) < 1e-12

    def test_boundary_matches_expoly(self):
        rng = random.Random(32)
        for _ in range(15):
            g = rng.randint(1, 5)
            c = random_int_coeffs(rng, g)
            try:
                H = hamiltonian(c, 2)
            except NotConstructible:
                continue
            C = embed_simple(c, 2)
            for _ in range(5):
                z = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
                a0, b0 = eval_AB(H, z, 1, 0.0)
                a1, b1 = eval_A_B(C, 2, z)
                assert abs(a0 - a1) < 1e-10 * max(1.0, abs(a1))
                assert abs(b0 - b1) < 1e-10 * max(1.0, abs(b1))

    def test_right_end_limit(self):
        rng = random.Random(33)
        for _ in range(10):
            g = rng.randint(1, 4)
            c = random_int_coeffs(rng, g)
            try:
                H = hamiltonian(c, 2)
            except NotConstructible:
                continue
            z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            a, b = eval_AB(H, z, 2 * g, 1 - 1e-10)
            assert abs(a - float(H.e_zero)) < 1e-6
            assert abs(b) < 1e-6

    def test_continuity_across_breakpoints(self):
        rng = random.Random(34)
        for _ in range(10):
            g = rng.randint(2, 5)
            c = random_int_coeffs(rng, g)
            try:
                H = hamiltonian(c, 2)
            except NotConstructible:
                continue
            z = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
            for n in range(1, 2 * g):
                left = eval_AB(H, z, n, 1 - 1e-12)
                right = eval_AB(H, z, n + 1, 0.0)
                scale = max(1.0, abs(left[0]), abs(left[1]))
                assert abs(left[0] - right[0]) < 1e-10 * scale
                assert abs(left[1] - right[1]) < 1e-10 * scale


class TestKernel:
    def test_positive_on_diagonal(self):
        H = hamiltonian(CoeffVector.make([1, 1, 1]), 2)
        rng = random.Random(35)
        for _ in range(20):
            z = complex(rng.uniform(-3, 3), rng.uniform(0.05, 3))
            k = kernel_K(H, 1, 0.0, z, z)
            assert abs(k.imag) < 1e-9 * max(1.0, abs(k))
            assert k.real > 0

    def test_hermitian_symmetry(self):
        H = hamiltonian(CoeffVector.make([1, 0, 1]), 2)
        z, w = 0.8 + 0.9j, -0.4 + 0.3j
        assert abs(kernel_K(H, 1, 0.2, z, w) - kernel_K(H, 1, 0.2, w, z).conjugate()) < 1e-12

    def test_pole_rejected(self):
        H = hamiltonian(CoeffVector.make([1, 0]), 2)
        with pytest.raises(ZeroDivisionError):
            kernel_K(H, 1, 0.0, 1 + 1j, 1 - 1j)  # z = conj(w)

    def test_monotone_decrease_only_with_positive_steps(self):
        # K(a; i, i) decreases in a when every step is positive ...
        H = hamiltonian(CoeffVector.make([1, 0]), 2)
        points = [(1, 0.0), (1, 0.5), (2, 0.0), (2, 0.5), (2, 0.99)]
        vals = [kernel_K(H, n, s, 1j, 1j).real for n, s in points]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        # ... and fails across the negative step of an off-circle polynomial
        H2 = hamiltonian(CoeffVector.make([1, -3]), 2)
        vals2 = [kernel_K(H2, n, s, 1j, 1j).real for n, s in points]
        assert not all(a > b for a, b in zip(vals2, vals2[1:]))


class TestOdeResidual:
    def test_zero_at_z_zero(self):
        H = hamiltonian(CoeffVector.make([1, 1, 1]), 2)
        assert ode_residual(H, 0.0, 2, 0.5, 1e-3) == (0.0, 0.0)

    def test_second_order(self):
        H = hamiltonian(CoeffVector.make([1, 1, 1]), 2)
        rng = random.Random(36)
        for _ in range(5):
            z = complex(rng.uniform(-4, 4), rng.uniform(-1, 1))
            r1 = ode_residual(H, z, 3, 0.5, 2e-3)
            r2 = ode_residual(H, z, 3, 0.5, 1e-3)
            for big, small in zip(r1, r2):
                if big > 1e-12:
                    assert 3.0 < big / small < 5.0

    def test_magnitude_at_desk_scale(self):
        # residual measured against the equation's right-hand-side magnitude;
        # the absolute version cannot hold uniformly once the solution scale
        # |E(0)| or a step value gets large
        rng = random.Random(37)
        for _ in range(10):
            g = rng.randint(1, 4)
            c = random_int_coeffs(rng, g)
            try:
                H = hamiltonian(c, 2)
            except NotConstructible:
                continue
            z = complex(rng.uniform(-5, 5), rng.uniform(-1, 1))
            a0, b0 = eval_AB(H, z, 1, 0.5)
            gamma = float(H.gamma(1))
            scale = max(1.0, abs(z) * max(gamma, 1 / gamma) * max(abs(a0), abs(b0)))
            ra, rb = ode_residual(H, z, 1, 0.5, 1e-4)
            assert ra < 1e-6 * scale and rb < 1e-6 * scale

    def test_stencil_guard(self):
        H = hamiltonian(CoeffVector.make([1, 0]), 2)
        with pytest.raises(StencilError):
            ode_residual(H, 1.0, 1, 0.99, 0.02)


class TestReconstruct:
    def test_g1_half_half(self):
        c = reconstruct_polynomial([F(1, 2), F(1, 2)], 2)
        assert c.c == (1, 0)

    def test_round_trip_g2(self):
        c = CoeffVector.make([1, 1, 1])
        H = hamiltonian(c, 2)
        out = reconstruct_polynomial([gm for _, gm in H.steps], c.value_at_one())
        assert out.c == c.c

    def test_scaling_invariance(self):
        rng = random.Random(38)
        for _ in range(10):
            g = rng.randint(1, 3)
            gammas = [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(2 * g)]
            p1 = F(rng.randint(1, 9))
            base = reconstruct_polynomial(gammas, p1)
            doubled = reconstruct_polynomial([2 * gm for gm in gammas], p1)
            assert base.c == doubled.c

    def test_zero_step_rejected(self):
        with pytest.raises(SingularStepError):
            reconstruct_polynomial([F(1), F(0)], 2)

    def test_cross_scale_consistency(self):
        # step values depend on the log scale, the reconstructed product
        # does not: L = 2, 3 and 5/2 must rebuild the same polynomial
        rng = random.Random(39)
        done = 0
        while done < 15:
            g = rng.randint(1, 4)
            c = random_int_coeffs(rng, g)
            try:
                hs = [hamiltonian(c, L) for L in (2, 3, F(5, 2))]
            except NotConstructible:
                continue
            p1 = c.value_at_one()
            outs = [reconstruct_polynomial([gm for _, gm in H.steps], p1) for H in hs]
            assert outs[0].c == outs[1].c == outs[2].c
            if delta_simple(c).all_positive_finite():
                assert outs[0].c == c.c
            done += 1
