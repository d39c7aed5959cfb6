"""2-D trap CM states: normalization, moments, energies."""

import math

import numpy as np
import pytest

from lgryd.cm import CMState, cm_amplitude, cm_moment, cm_energy
from _oracles import cm_moment_series


class TestCMState:
    def test_invariants(self):
        with pytest.raises(ValueError):
            CMState(N=1, M=0, w_r=1.0)   # parity
        with pytest.raises(ValueError):
            CMState(N=1, M=2, w_r=1.0)   # N >= |M|
        with pytest.raises(ValueError):
            CMState(N=0, M=0, w_r=0.0)
        s = CMState(N=4, M=-2, w_r=2.0)
        assert s.n_minus == 1 and s.n_plus == 3


class TestAmplitude:
    def test_ground_state_origin(self):
        s = CMState(0, 0, w_r=1.7)
        assert cm_amplitude(s, 0.0) == pytest.approx(math.sqrt(2.0) / 1.7, rel=1e-13)

    def test_vortex_node_at_origin(self):
        assert cm_amplitude(CMState(1, 1, 1.0), 0.0) == 0.0

    @pytest.mark.parametrize("N,M", [(0, 0), (1, 1), (1, -1), (2, 0), (4, 2)])
    def test_unit_norm(self, N, M):
        # 2-D normalization: integral A^2 r dr = 1
        from scipy.integrate import simpson
        s = CMState(N, M, w_r=0.8)
        r = np.linspace(0.0, 12.0 * s.w_r, 20001)
        a = np.array([cm_amplitude(s, ri) for ri in r])
        val = simpson(a * a * r, x=r)
        assert val == pytest.approx(1.0, abs=1e-10)

    def test_sign_of_M_irrelevant(self):
        sp = CMState(3, 1, 1.0)
        sm = CMState(3, -1, 1.0)
        for r in (0.2, 0.9, 2.3):
            assert cm_amplitude(sp, r) == pytest.approx(cm_amplitude(sm, r), rel=1e-14)


class TestMoment:
    def test_diagonal_normalization(self):
        s = CMState(0, 0, 1.3)
        assert cm_moment(s, s, 0) == pytest.approx(1.0, abs=1e-12)

    def test_ground_second_moment(self):
        s = CMState(0, 0, 1.0)
        assert cm_moment(s, s, 2) == pytest.approx(1.0, abs=1e-12)

    def test_frozen_small_moments(self):
        w = 2.2
        f10 = CMState(1, 1, w)
        g = CMState(0, 0, w)
        assert cm_moment(f10, g, 1) == pytest.approx(1.0, abs=1e-12)
        assert cm_moment(CMState(2, 2, w), g, 2) == pytest.approx(math.sqrt(2.0), abs=1e-12)
        assert cm_moment(CMState(2, 0, w), g, 2) == pytest.approx(-1.0, abs=1e-12)
        assert cm_moment(f10, g, 3) == pytest.approx(2.0, abs=1e-12)
        assert cm_moment(CMState(3, 1, w), g, 1) == pytest.approx(0.0, abs=1e-12)

    def test_stretched_ladder(self):
        # <(L,L)| x^L |(0,0)> = sqrt(L!)
        for L in range(1, 6):
            got = cm_moment(CMState(L, L, 1.0), CMState(0, 0, 1.0), L)
            assert got == pytest.approx(math.sqrt(math.factorial(L)), rel=1e-12)

    def test_orthonormality(self):
        for M in (0, 1, -2):
            Ns = [N for N in range(abs(M), abs(M) + 13, 2)][:7]
            for Na in Ns:
                for Nb in Ns:
                    got = cm_moment(CMState(Na, M, 1.0), CMState(Nb, M, 1.0), 0)
                    assert got == pytest.approx(1.0 if Na == Nb else 0.0, abs=1e-10)

    def test_symmetric(self):
        a, b = CMState(4, 2, 1.0), CMState(2, 2, 1.0)
        assert cm_moment(a, b, 2) == pytest.approx(cm_moment(b, a, 2), rel=1e-13)

    def test_matches_gamma_series(self):
        for (Nf, Mf), (Ni, Mi), beta in [
            ((0, 0), (0, 0), 0), ((0, 0), (0, 0), 4),
            ((2, 2), (0, 0), 2), ((2, 0), (2, 0), 2),
            ((4, 2), (2, 2), 1), ((3, 1), (1, 1), 2),
            ((4, 0), (0, 0), 4), ((3, 3), (1, 1), 2),
        ]:
            got = cm_moment(CMState(Nf, Mf, 1.0), CMState(Ni, Mi, 1.0), beta)
            ref = cm_moment_series(Nf, Mf, Ni, Mi, beta)
            assert got == pytest.approx(ref, abs=1e-10), (Nf, Mf, Ni, Mi, beta)

    def test_trap_mismatch_raises(self):
        with pytest.raises(ValueError):
            cm_moment(CMState(0, 0, 1.0), CMState(0, 0, 1.1), 0)

    def test_dimensionless_in_w_r(self):
        # moments are in units of w_r already; changing w_r must not move them
        a = cm_moment(CMState(2, 2, 0.7), CMState(0, 0, 0.7), 2)
        b = cm_moment(CMState(2, 2, 5.0), CMState(0, 0, 5.0), 2)
        assert a == pytest.approx(b, rel=1e-13)


class TestEnergy:
    def test_ground(self):
        s = CMState(0, 0, w_r=2.0)
        assert cm_energy(s, m_t=3.0) == pytest.approx(1.0 / (4.0 * 3.0), rel=1e-14)

    def test_linear_in_quanta(self):
        w, m = 1.5, 2.0
        e0 = cm_energy(CMState(0, 0, w), m)
        e2 = cm_energy(CMState(2, 0, w), m)
        assert e2 == pytest.approx(3.0 * e0, rel=1e-14)

    def test_width_power_law(self):
        m = 1.0
        assert cm_energy(CMState(0, 0, 2.0), m) == pytest.approx(
            cm_energy(CMState(0, 0, 1.0), m) / 4.0, rel=1e-14)

    def test_bad_mass(self):
        with pytest.raises(ValueError):
            cm_energy(CMState(0, 0, 1.0), 0.0)
