import numpy as np
import pytest

from sl3charvar import linalg as la
from sl3charvar.errors import NotCentral
from sl3charvar.involutions import (
    I21,
    TAU0,
    TAU1,
    TAU2,
    Involution,
    RealFormType,
    conjugate_involution,
    fixed_lie_algebra,
    identify_real_form,
    involution_from_json,
    involution_to_json,
    twist,
)
from sl3charvar.quotients import companion_lift
from sl3charvar.sampling import random_sl3c, random_sl3r, random_su3, random_su21

RNG = np.random.default_rng(777)


class TestApply:
    def test_tau0_conjugates_entries(self):
        m = la.mat3(np.diag([1j, -1j, 1.0]))
        assert np.allclose(TAU0.apply(m), np.diag([-1j, 1j, 1.0]))

    def test_tau1_fixes_unitary(self):
        for _ in range(10):
            u = random_su3(RNG)
            assert la.fro(TAU1.apply(u) - u) < 1e-12

    def test_tau2_on_real_diagonal(self):
        # J t(conj M)^-1 J^-1 with J = diag(1,1,-1) inverts the entries
        m = la.mat3(np.diag([2.0, 1.0, 0.5]))
        assert np.allclose(TAU2.apply(m), np.diag([0.5, 1.0, 2.0]))

    def test_involutive(self):
        for t in (TAU0, TAU1, TAU2):
            for _ in range(100):
                m = random_sl3c(RNG)
                assert la.fro(t.apply(t.apply(m)) - m) < 1e-7 * max(1.0, la.fro(m))


class TestIsFixed:
    def test_real_companion(self):
        assert TAU0.is_fixed(companion_lift(1.7, -0.3))

    def test_tau2_unit_diagonal(self):
        a, b = 0.8, -1.3
        m = la.mat3(np.diag(np.exp(1j * np.array([a, b, -a - b]))))
        assert TAU2.is_fixed(m)

    def test_tau1_rejects_nonunitary(self):
        assert not TAU1.is_fixed(la.mat3(np.diag([2.0, 1.0, 0.5])))


class TestTwist:
    def test_identity_twist(self):
        t = twist(TAU0, la.IDENTITY)
        for _ in range(5):
            m = random_sl3c(RNG)
            assert np.allclose(t.apply(m), TAU0.apply(m))

    def test_twist_tau1_by_i21_is_tau2(self):
        t = twist(TAU1, I21)
        for _ in range(10):
            m = random_sl3c(RNG)
            assert la.fro(t.apply(m) - TAU2.apply(m)) < 1e-10 * max(1.0, la.fro(m))

    def test_not_central(self):
        # h real rotation by pi/2: h conj(h) = h^2 = diag(-1,-1,1), not central
        h = la.mat3([[0, 1, 0], [-1, 0, 0], [0, 0, 1]])
        with pytest.raises(NotCentral):
            twist(TAU0, h)

    def test_central_phase_diagonal(self):
        # h = diag(i, i, -1) has h conj(h) = I, so the twist is legal
        h = la.mat3(np.diag([1j, 1j, -1.0]))
        t = twist(TAU0, h)
        assert identify_real_form(t) is RealFormType.SL3R


class TestFixedLieAlgebra:
    def test_tau0_is_real(self):
        basis = fixed_lie_algebra(TAU0)
        assert len(basis) == 8
        for x in basis:
            assert np.max(np.abs(x.imag)) < 1e-9
            assert abs(np.trace(x)) < 1e-9

    def test_tau1_is_antihermitian(self):
        for x in fixed_lie_algebra(TAU1):
            assert la.fro(x + x.conj().T) < 1e-9

    def test_tau2_preserves_form(self):
        # X* H + H X = 0 with H = diag(1,1,-1)
        for x in fixed_lie_algebra(TAU2):
            assert la.fro(x.conj().T @ I21 + I21 @ x) < 1e-9

    def test_closed_under_bracket(self):
        for t in (TAU0, TAU1, TAU2):
            basis = fixed_lie_algebra(t)
            mat = np.column_stack([b.reshape(-1) for b in basis])
            pinv = np.linalg.pinv(mat)
            for i in range(8):
                for j in range(i + 1, 8):
                    br = basis[i] @ basis[j] - basis[j] @ basis[i]
                    coeff = pinv @ br.reshape(-1)
                    recon = (mat @ coeff).reshape(3, 3)
                    assert la.fro(recon - br) < 1e-8 * max(1.0, la.fro(br))
                    # the coefficients are real: the basis spans a real algebra
                    assert np.max(np.abs(coeff.imag)) < 1e-7


class TestIdentify:
    def test_standard_types(self):
        assert identify_real_form(TAU0) is RealFormType.SL3R
        assert identify_real_form(TAU1) is RealFormType.SU3
        assert identify_real_form(TAU2) is RealFormType.SU21

    def test_twist_by_i21(self):
        assert identify_real_form(twist(TAU1, I21)) is RealFormType.SU21

    def test_invariant_under_conjugate_twist(self):
        # the twisted form k G k^-1 has the type of G, for any k in SL(3,C)
        for t in (TAU0, TAU1, TAU2):
            expected = identify_real_form(t)
            for _ in range(50):
                k = random_sl3c(RNG)
                tc = conjugate_involution(t, k)
                for _ in range(3):
                    m = random_sl3c(RNG)
                    assert la.fro(tc.apply(tc.apply(m)) - m) < 1e-6 * max(1.0, la.fro(m))
                assert identify_real_form(tc) is expected

    def test_conjugated_involution_fixes_conjugated_form(self):
        samplers = [(TAU0, random_sl3r), (TAU1, random_su3), (TAU2, random_su21)]
        for t, sampler in samplers:
            k = random_sl3c(RNG)
            tc = conjugate_involution(t, k)
            for _ in range(10):
                g = sampler(RNG)
                assert tc.is_fixed(k @ g @ la.inverse(k), la.Tol(1e-6, 1e-6))


class TestJson:
    def test_round_trip(self):
        for t in (TAU0, TAU1, TAU2):
            back = involution_from_json(involution_to_json(t))
            assert back.kind == t.kind
            assert np.allclose(back.matrix, t.matrix)

    def test_aliases(self):
        assert involution_from_json("tau2").kind == "second"
        with pytest.raises(ValueError):
            involution_from_json("tau9")

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            involution_from_json({"kind": "first"})


def test_invalid_involution_rejected():
    # A = diag(2,1,1): A conj(A) = diag(4,1,1) is not scalar
    with pytest.raises(ValueError):
        Involution("first", np.diag([2.0, 1.0, 1.0]))
