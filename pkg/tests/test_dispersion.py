import math

import pytest

from casimir.engine import Tolerance
from casimir.matsubara import CavityConfig
from casimir.dispersion import (
    LorentzModel,
    CutoffSpec,
    eps_of_omega,
    eps_imag_axis,
    dispersive_mode_solve,
    photon_index,
    w_I_energy,
    w2_density_cutoff,
)
import casimir.dispersion as dispersion

PI2_720 = math.pi**2 / 720.0
MODEL = LorentzModel(eps_bar=2.0, omega0=10.0)

# root of the k=5 mode condition: x = omega^2 solves x^2 - 225 x + 2500 = 0
OMEGA_K5 = math.sqrt((225.0 - math.sqrt(40625.0)) / 2.0)

CFG0 = CavityConfig(a=1.0, T=0.0)


class TestLorentzPermittivity:
    def test_static_and_high_frequency_limits(self):
        assert eps_of_omega(MODEL, 0.0) == pytest.approx(2.0, rel=1e-15)
        assert eps_of_omega(MODEL, 1e6) == pytest.approx(1.0, rel=1e-8)

    def test_midband_value(self):
        # 1 + 1/(1 - 0.25) = 7/3
        assert eps_of_omega(MODEL, 5.0) == pytest.approx(7.0 / 3.0, rel=1e-15)

    def test_resonance_zone_rejected(self):
        for omega in (9.6, 10.0, 10.4):
            with pytest.raises(ValueError):
                eps_of_omega(MODEL, omega)
        # configurable half-width: large positive below the pole, negative above
        assert eps_of_omega(MODEL, 9.6, delta=0.01) > 10.0
        assert eps_of_omega(MODEL, 10.4, delta=0.01) < 0.0

    def test_imaginary_axis_monotone(self):
        zetas = [0.0, 0.5, 1.0, 5.0, 20.0, 100.0]
        vals = [eps_imag_axis(MODEL, z) for z in zetas]
        assert vals[0] == pytest.approx(2.0, rel=1e-15)
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert vals[-1] > 1.0

    def test_model_validation(self):
        with pytest.raises(ValueError):
            LorentzModel(eps_bar=0.5, omega0=1.0)
        with pytest.raises(ValueError):
            LorentzModel(eps_bar=2.0, omega0=0.0)
        LorentzModel(eps_bar=1.0, omega0=1.0)  # degenerate vacuum branch allowed


class TestModeSolve:
    def test_quadratic_oracle(self):
        w = dispersive_mode_solve(MODEL, 5.0)
        assert w == pytest.approx(OMEGA_K5, rel=1e-12)
        assert abs(w - 3.4237) < 1e-4

    @pytest.mark.parametrize("k", [1.0, 2.0, 4.0, 8.0])
    def test_residual(self, k):
        w = dispersive_mode_solve(MODEL, k)
        assert abs(math.sqrt(eps_of_omega(MODEL, w)) * w - k) <= 1e-10 * k

    def test_static_limit(self):
        # k -> 0: omega -> k/sqrt(eps_bar)
        w = dispersive_mode_solve(MODEL, 0.01)
        assert w == pytest.approx(0.01 / math.sqrt(2.0), rel=1e-4)

    def test_monotone_in_k(self):
        roots = [dispersive_mode_solve(MODEL, k) for k in (1.0, 2.0, 4.0, 8.0)]
        assert all(a < b for a, b in zip(roots, roots[1:]))

    def test_root_stays_below_resonance(self):
        assert dispersive_mode_solve(MODEL, 500.0) < MODEL.omega0

    def test_vacuum_branch(self):
        assert dispersive_mode_solve(LorentzModel(1.0, 10.0), 37.5) == 37.5

    def test_rejects_nonpositive_k(self):
        with pytest.raises(ValueError):
            dispersive_mode_solve(MODEL, 0.0)


class TestPhotonIndex:
    def test_limits(self):
        m = LorentzModel(eps_bar=2.0, omega0=1.0)
        assert photon_index(m, 1e-3) == pytest.approx(math.sqrt(2.0), rel=1e-5)
        assert photon_index(m, 1e3) == pytest.approx(1.0, rel=1e-5)

    def test_gap_jump(self):
        # crossing k = omega0 hops the polariton gap: n > 1 below, n < 1 above
        m = LorentzModel(eps_bar=2.0, omega0=1.0)
        assert photon_index(m, 0.999) > 1.0
        assert photon_index(m, 1.001) < 1.0


class TestWIEnergy:
    def test_vacuum_limit(self):
        w = w_I_energy(LorentzModel(1.0, 10.0), CFG0)
        assert w.value == pytest.approx(-PI2_720, rel=1e-8)

    def test_stiff_resonance_reduces_to_constant_index(self):
        # omega0 -> inf with eps_bar = n^2 = 4 fixed: eps(i zeta) -> 4 uniformly
        w = w_I_energy(LorentzModel(4.0, 1e4), CFG0)
        assert w.value == pytest.approx(-PI2_720 / 2.0, rel=1e-6)

    def test_intermediate_model_is_bracketed(self):
        w = w_I_energy(LorentzModel(2.0, 1.0), CFG0)
        assert -PI2_720 < w.value < -PI2_720 / math.sqrt(2.0)

    def test_requires_zero_temperature(self):
        with pytest.raises(ValueError):
            w_I_energy(MODEL, CavityConfig(a=1.0, T=1.0))


class TestW2Cutoff:
    def test_divergence_scan_grows(self):
        soft = LorentzModel(eps_bar=2.0, omega0=0.2)
        res = w2_density_cutoff(soft, CFG0, CutoffSpec(omega_max=2.0))
        mags = [abs(v) for _, v in res.scan]
        assert mags[0] < mags[1] < mags[2]
        assert res.value.value == res.scan[0][1]
        assert res.value.value < 0

    def test_vacuum_model_vanishes(self):
        res = w2_density_cutoff(LorentzModel(1.0, 1.0), CFG0, CutoffSpec(omega_max=5.0))
        assert res.value.value == 0.0
        assert all(v == 0.0 for _, v in res.scan)

    def test_separation_prefactor_linear(self, monkeypatch):
        # with the transverse integral mocked to a constant, only the
        # explicit 2a prefactor can carry the a-dependence
        monkeypatch.setattr(dispersion, "_w2_transverse_integral", lambda *args: 1.0)
        soft = LorentzModel(eps_bar=2.0, omega0=0.2)
        one = w2_density_cutoff(soft, CavityConfig(a=1.0, T=0.0), CutoffSpec(2.0))
        two = w2_density_cutoff(soft, CavityConfig(a=2.0, T=0.0), CutoffSpec(2.0))
        assert two.value.value == pytest.approx(2.0 * one.value.value, rel=1e-14)

    def test_cutoff_spec_validation(self):
        with pytest.raises(ValueError):
            CutoffSpec(omega_max=0.0)
        with pytest.raises(ValueError):
            CutoffSpec(omega_max=1.0, exclusion_halfwidth=1.5)
