import logging
import math

import numpy as np
import pytest

from conftest import make_spec
from models.dynamics import RegionKind
from physics.exact import exact_transmission
from physics.wkb import barrier_action, log_transmission_fit, wkb_profile, wkb_transmission
from utils.error_handling import NoBarrierError, RegionMismatchError, TurningPointDivergenceError

H = RegionKind.H_BARRIER
h = RegionKind.H_NORMAL


def half_disk_area(x):
    """∫_0^x √(1 - t²) dt."""
    return 0.5 * (x * math.sqrt(1.0 - x * x) + math.asin(x))


class TestWkbProfile:

    def test_oscillatory_region(self, harmonic_well):
        xs = np.linspace(-0.5, 0.5, 11)
        profile = wkb_profile(h, harmonic_well, 0.5, 1.0, 0.1, 0.0, xs)
        p = np.sqrt(1.0 - xs ** 2)
        assert np.allclose(profile.amplitude, 1.0 / np.sqrt(p), rtol=1e-12)
        expected_phase = [half_disk_area(x) / 0.1 for x in xs]
        assert np.allclose(profile.phase, expected_phase, rtol=1e-10, atol=1e-12)
        assert profile.amplitude[5] == pytest.approx(1.0)

    @pytest.mark.parametrize("branch, sign", [("decaying", -1.0), ("growing", 1.0)])
    def test_barrier_region_branches(self, parabolic_barrier, branch, sign):
        xs = np.array([-0.5, 0.0, 0.5])
        profile = wkb_profile(H, parabolic_barrier, 0.5, 1.0, 0.2, 0.0, xs, branch=branch)
        expected = [
            math.sqrt(1.0 / math.sqrt(1.0 - x * x)) * math.exp(sign * half_disk_area(x) / 0.2)
            for x in xs
        ]
        assert np.allclose(profile.amplitude, expected, rtol=1e-10)
        assert np.all(profile.phase == 0.0)

    def test_decaying_branch_falls_off_to_the_right(self, parabolic_barrier):
        profile = wkb_profile(H, parabolic_barrier, 0.5, 1.0, 0.05, -0.5, np.linspace(-0.5, 0.5, 5))
        assert np.all(np.diff(profile.amplitude) < 0)

    def test_amplitude_is_multiplicative(self, parabolic_barrier):
        def amplitude(x_ref, x):
            return wkb_profile(H, parabolic_barrier, 0.5, 1.0, 0.2, x_ref, [x]).amplitude[0]
        chained = amplitude(-0.6, 0.1) * amplitude(0.1, 0.7)
        assert chained == pytest.approx(amplitude(-0.6, 0.7), rel=1e-10)

    def test_branches_are_dual(self, parabolic_barrier):
        xs = np.array([-0.7, -0.2, 0.4, 0.8])
        decaying = wkb_profile(H, parabolic_barrier, 0.5, 1.0, 0.2, 0.1, xs, branch="decaying")
        growing = wkb_profile(H, parabolic_barrier, 0.5, 1.0, 0.2, 0.1, xs, branch="growing")
        expected = math.sqrt(1.0 - 0.1 ** 2) / np.sqrt(1.0 - xs ** 2)
        assert np.allclose(decaying.amplitude * growing.amplitude, expected, rtol=1e-12)

    def test_constant_potential_is_a_plane_wave(self, free_space):
        xs = np.array([-1.0, 0.0, math.pi])
        profile = wkb_profile(h, free_space, 0.5, 1.0, 1.0, 0.0, xs)
        assert np.allclose(profile.amplitude, 1.0, rtol=1e-12)
        assert profile.phase[-1] == pytest.approx(math.pi, rel=1e-12)

    def test_square_barrier_decays_by_one_e_fold(self, square_barrier):
        profile = wkb_profile(H, square_barrier, 0.5, 1.0, 1.0, -0.5, [-0.5, 0.5])
        assert profile.amplitude == pytest.approx([1.0, math.exp(-1.0)], rel=1e-12)

    def test_exclusion_zone(self, harmonic_well):
        with pytest.raises(TurningPointDivergenceError):
            wkb_profile(h, harmonic_well, 0.5, 1.0, 1.0, 0.0, [1.0 - 1e-7])

    def test_sample_outside_region(self, harmonic_well):
        with pytest.raises(RegionMismatchError):
            wkb_profile(h, harmonic_well, 0.5, 1.0, 1.0, 0.0, [1.5])

    def test_reference_in_wrong_region(self, parabolic_barrier):
        with pytest.raises(RegionMismatchError):
            wkb_profile(h, parabolic_barrier, 0.5, 1.0, 1.0, 0.0, [0.1])

    def test_validity_warning_near_turning_point(self, harmonic_well, caplog):
        with caplog.at_level(logging.WARNING, logger="tunnelcore"):
            profile = wkb_profile(h, harmonic_well, 0.5, 1.0, 1.0, 0.0, [0.0, 0.999])
        assert profile.validity > 1.0
        assert "validade" in caplog.text


class TestBarrierAction:

    def test_parabolic_barrier(self, parabolic_barrier):
        action = barrier_action(parabolic_barrier, 0.5)
        assert action.S == pytest.approx(math.pi / 2, rel=1e-10)
        assert (action.b, action.c) == pytest.approx((-1.0, 1.0), abs=1e-9)
        assert not action.degenerate

    def test_square_barrier(self, square_barrier):
        assert barrier_action(square_barrier, 0.5).S == pytest.approx(2.0, rel=1e-9)

    def test_peak_energy_is_degenerate(self, parabolic_barrier):
        action = barrier_action(parabolic_barrier, 1.0)
        assert action.S == 0.0
        assert action.b == action.c
        assert action.degenerate

    def test_flat_top_gives_zero_action(self, flat_top):
        action = barrier_action(flat_top, 1.0)
        assert action.S == 0.0
        assert action.b < action.c
        assert action.degenerate

    def test_above_peak(self, gaussian_barrier):
        with pytest.raises(NoBarrierError):
            barrier_action(gaussian_barrier, 2.0)


class TestTransmission:

    def test_primitive_formula(self, parabolic_barrier):
        result = wkb_transmission(parabolic_barrier, 0.5, 1.0, 0.5)
        assert result.T == pytest.approx(math.exp(-2.0 * math.pi))
        assert result.R == pytest.approx(1.0 - result.T)
        assert result.to_dict()["method"] == "wkb-primitive"

    def test_small_hbar(self, parabolic_barrier):
        result = wkb_transmission(parabolic_barrier, 0.5, 1.0, 0.1)
        assert result.T == pytest.approx(math.exp(-10.0 * math.pi), rel=1e-8)

    @pytest.mark.parametrize("key, values", [("width", [1.0, 2.0, 3.0]), ("V0", [1.0, 1.5, 2.0])])
    def test_thicker_or_taller_barriers_transmit_less(self, key, values):
        params = {"V0": 1.0, "width": 2.0}
        specs = [make_spec("square_barrier", (-6.0, 6.0), **{**params, key: value}) for value in values]
        for method in (exact_transmission, wkb_transmission):
            Ts = [method(spec, 0.5).T for spec in specs]
            assert Ts[0] > Ts[1] > Ts[2]

    @pytest.mark.parametrize("exponent", [5.0, 10.0, 15.0])
    def test_log_domain_agreement_with_exact(self, gaussian_barrier, exponent):
        S = barrier_action(gaussian_barrier, 0.5).S
        hbar = 2.0 * S / exponent
        wkb = wkb_transmission(gaussian_barrier, 0.5, 1.0, hbar)
        exact = exact_transmission(gaussian_barrier, 0.5, 1.0, hbar, grid_n=4096)
        assert wkb.ln_T == pytest.approx(-exponent)
        assert abs(wkb.ln_T - exact.ln_T) / abs(exact.ln_T) <= 0.1

    def test_hbar_scaling(self, gaussian_barrier):
        S = barrier_action(gaussian_barrier, 0.5).S
        hbars = [1.0, 1.0 / 2, 1.0 / 3, 1.0 / 4]
        primitive = log_transmission_fit(gaussian_barrier, 0.5, 1.0, hbars)
        assert primitive.slope == pytest.approx(-2.0 * S, rel=1e-3)
        exact = log_transmission_fit(gaussian_barrier, 0.5, 1.0, hbars, method="transfer_matrix", grid_n=4096)
        assert exact.slope == pytest.approx(-2.0 * S, rel=0.05)
