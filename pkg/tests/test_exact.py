import math

import numpy as np
import pytest

from conftest import make_spec
from physics.exact import asymptotic_levels, bound_profile, exact_transmission
from utils.error_handling import DomainError, DomainPaddingError, NoPropagatingChannelError


def rectangular_transmission(E, V0=1.0, width=2.0, m0=1.0, hbar=1.0):
    if E < V0:
        kappa = math.sqrt(2.0 * m0 * (V0 - E)) / hbar
        return 1.0 / (1.0 + V0 ** 2 * math.sinh(kappa * width) ** 2 / (4.0 * E * (V0 - E)))
    k = math.sqrt(2.0 * m0 * (E - V0)) / hbar
    return 1.0 / (1.0 + V0 ** 2 * math.sin(k * width) ** 2 / (4.0 * E * (E - V0)))


class TestTransferMatrix:

    def test_square_barrier_closed_form(self, square_barrier):
        result = exact_transmission(square_barrier, 0.5)
        assert result.T == pytest.approx(1.0 / (1.0 + math.sinh(2.0) ** 2), rel=1e-10)

    @pytest.mark.parametrize("E", np.linspace(0.1, 0.9, 9))
    def test_closed_form_below_barrier(self, square_barrier, E):
        assert exact_transmission(square_barrier, E).T == pytest.approx(rectangular_transmission(E), rel=1e-10)

    def test_unitarity_across_scan(self, square_barrier):
        for E in np.linspace(0.05, 3.0, 50):
            result = exact_transmission(square_barrier, float(E))
            assert result.unitarity_defect <= 1e-10
            assert result.T == pytest.approx(rectangular_transmission(E), rel=1e-9)

    def test_thick_barrier_log_domain(self):
        spec = make_spec("square_barrier", (-300.0, 300.0), V0=1.0, width=400.0)
        result = exact_transmission(spec, 0.5)
        assert result.T == 0.0
        assert result.log_T == pytest.approx(-800.0 + 2.0 * math.log(2.0), rel=1e-10)
        assert result.R == pytest.approx(1.0)

    def test_smooth_barrier_converges(self, gaussian_barrier):
        result = exact_transmission(gaussian_barrier, 0.5, grid_n=2048)
        assert result.richardson_defect < 1e-3 * result.T
        assert result.unitarity_defect <= 1e-10

    def test_energy_at_barrier_top(self, square_barrier):
        # Dentro da barreira ψ é linear: T = 1 / (1 + m0 V0 a² / 2ħ²E).
        assert exact_transmission(square_barrier, 1.0).T == pytest.approx(1.0 / 3.0, rel=1e-10)

    def test_free_space_is_transparent(self, free_space):
        result = exact_transmission(free_space, 0.5)
        assert result.T == pytest.approx(1.0, abs=1e-12)
        assert result.R == pytest.approx(0.0, abs=1e-12)

    def test_far_above_barrier(self, square_barrier):
        result = exact_transmission(square_barrier, 10.0)
        assert result.T >= 0.9
        assert result.T == pytest.approx(rectangular_transmission(10.0), rel=1e-10)

    def test_reciprocity_on_asymmetric_barrier(self):
        spec = make_spec("piecewise_linear", (-10.0, 10.0), xs=[-10.0, -2.0, 0.0, 3.0, 10.0], vs=[0.0, 0.0, 1.2, 0.3, 0.3])
        left = exact_transmission(spec, 0.6)
        right = exact_transmission(spec.mirrored(), 0.6)
        assert right.T == pytest.approx(left.T, rel=1e-8)
        assert right.R == pytest.approx(left.R, rel=1e-8)

    def test_second_order_grid_convergence(self, gaussian_barrier):
        defects = [exact_transmission(gaussian_barrier, 0.5, grid_n=n).richardson_defect for n in (256, 512, 1024)]
        for coarse, fine in zip(defects, defects[1:]):
            assert math.log2(coarse / fine) >= 1.8


class TestNumerov:

    def test_agrees_with_transfer_matrix(self, gaussian_barrier):
        matrix = exact_transmission(gaussian_barrier, 0.5, grid_n=4096)
        numerov = exact_transmission(gaussian_barrier, 0.5, grid_n=4096, method="numerov")
        assert numerov.T == pytest.approx(matrix.T, rel=1e-3)
        assert numerov.unitarity_defect <= 1e-10

    def test_square_barrier(self, square_barrier):
        result = exact_transmission(square_barrier, 0.5, grid_n=8192, method="numerov")
        assert result.T == pytest.approx(rectangular_transmission(0.5), rel=1e-2)

    def test_grid_convergence_order(self, gaussian_barrier):
        coarse = exact_transmission(gaussian_barrier, 0.5, grid_n=256, method="numerov").richardson_defect
        fine = exact_transmission(gaussian_barrier, 0.5, grid_n=512, method="numerov").richardson_defect
        assert math.log2(coarse / fine) >= 1.8

    def test_profile_decays_inside_thick_barrier(self):
        spec = make_spec("square_barrier", (-10.0, 10.0), V0=1.0, width=10.0)
        profile = bound_profile(spec, 0.5, grid=4000)
        assert len(profile.xs) == 4001
        assert profile.xs[1200] == pytest.approx(-4.0)
        assert profile.xs[1600] == pytest.approx(-2.0)
        # κ = 1: |ψ|² cai como e^{-2κx}.
        ratio = math.log(profile.density[1600] / profile.density[1200])
        assert ratio == pytest.approx(-4.0, rel=1e-2)

    def test_profile_is_normalized_to_incident_wave(self, free_space):
        profile = bound_profile(free_space, 0.5, grid=1024)
        assert np.allclose(profile.density, 1.0, rtol=1e-8)


class TestBoundaries:

    def test_no_propagating_channel(self, square_well):
        with pytest.raises(NoPropagatingChannelError):
            exact_transmission(square_well, 0.5)

    def test_domain_must_be_padded(self, harmonic_well):
        with pytest.raises(DomainPaddingError):
            exact_transmission(harmonic_well, 0.5)

    def test_asymptotic_levels(self, square_well):
        assert asymptotic_levels(square_well) == (1.0, 1.0)

    def test_grid_too_coarse(self, square_barrier):
        with pytest.raises(DomainError):
            exact_transmission(square_barrier, 0.5, grid_n=16)

    def test_wkb_method_is_rejected(self, square_barrier):
        with pytest.raises(DomainError):
            exact_transmission(square_barrier, 0.5, method="wkb-primitive")
