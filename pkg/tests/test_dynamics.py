import math

import pytest

from config import Config
from models.dynamics import ParticleState, RegionKind, is_real_time
from models.potential import PotentialSpec
from physics.dynamics import (
    energy_function, full_period, half_period, integrate_trajectory,
    region_survey, roundtrip_consistency, speed_from_energy,
)
from physics.potential import find_turning_points
from utils.error_handling import DivergentPeriodError, DomainError, RegionMismatchError, StepSizeError

H = RegionKind.H_BARRIER
h = RegionKind.H_NORMAL


def state(x, v, E, m0=1.0, t=0.0):
    return ParticleState(t=t, x=x, v=v, m0=m0, E=E)


class TestEnergyFunctions:

    def test_signs(self):
        assert energy_function(h, V=1.0, v=2.0, m0=1.0) == pytest.approx(3.0)
        assert energy_function(H, V=1.0, v=2.0, m0=1.0) == pytest.approx(-1.0)

    def test_free_particle_speed(self, free_space):
        assert speed_from_energy(h, free_space, 1.0, 0.0, 1.0) == pytest.approx(math.sqrt(2.0))

    def test_speed_vanishes_at_turning_point(self, harmonic_well):
        assert speed_from_energy(h, harmonic_well, 0.5, 1.0) == pytest.approx(0.0, abs=1e-12)
        assert speed_from_energy(H, harmonic_well, 0.5, 1.0) == pytest.approx(0.0, abs=1e-12)

    def test_barrier_region_speed(self, parabolic_barrier):
        assert speed_from_energy(H, parabolic_barrier, 0.5, 0.0, 1.0) == pytest.approx(1.0)

    def test_wrong_region(self, parabolic_barrier):
        with pytest.raises(RegionMismatchError):
            speed_from_energy(h, parabolic_barrier, 0.5, 0.0, 1.0)


class TestIntegrateTrajectory:

    def test_uniform_motion(self, free_space):
        trajectory = integrate_trajectory(h, free_space, state(0.0, 1.0, 0.5), t_end=3.0, dt=1e-3)
        assert trajectory.final.x == pytest.approx(3.0, rel=1e-9)
        assert trajectory.final.t == pytest.approx(3.0)
        assert trajectory.status == "completed"

    def test_harmonic_oscillation(self, harmonic_well):
        dt = math.pi / 10000
        trajectory = integrate_trajectory(
            h, harmonic_well, state(1.0, 0.0, 0.5), t_end=math.pi, dt=dt, halt_at_turning=False,
        )
        assert trajectory.final.x == pytest.approx(-1.0, abs=1e-6)
        assert trajectory.energy_drift <= Config.CONSERVATION_CONSTANT * dt * dt

    def test_barrier_region_follows_sine(self, parabolic_barrier):
        trajectory = integrate_trajectory(H, parabolic_barrier, state(0.0, 1.0, 0.5), t_end=1.0, dt=1e-3)
        assert trajectory.final.t == pytest.approx(1.0)
        assert trajectory.final.x == pytest.approx(math.sin(1.0), abs=1e-6)

    def test_halts_at_turning_point(self, parabolic_barrier):
        trajectory = integrate_trajectory(H, parabolic_barrier, state(0.0, 1.0, 0.5), t_end=10.0, dt=1e-3)
        assert trajectory.status == "turning_point"
        assert trajectory.turning_time == pytest.approx(math.pi / 2, abs=1e-5)
        assert trajectory.turning_x == pytest.approx(1.0, abs=1e-6)

    def test_force_inversion_duality(self, parabolic_barrier):
        barrier = integrate_trajectory(
            H, parabolic_barrier, state(0.0, 1.0, 0.5), t_end=5.0, dt=1e-3, halt_at_turning=False,
        )
        well = integrate_trajectory(
            h, parabolic_barrier.inverted(), state(0.0, 1.0, -0.5), t_end=5.0, dt=1e-3, halt_at_turning=False,
        )
        assert len(barrier.samples) == len(well.samples)
        for a, b in zip(barrier.samples, well.samples):
            assert a.t == b.t
            assert abs(a.x - b.x) <= 1e-12
            assert abs(a.v - b.v) <= 1e-12

    def test_successive_hits_alternate(self, harmonic_well):
        trajectory = integrate_trajectory(
            h, harmonic_well, state(0.0, 1.0, 0.5), t_end=10.0, dt=1e-3, halt_at_turning=False,
        )
        xs = [x for _, x in trajectory.turning_hits]
        assert len(xs) >= 3
        for left, right in zip(xs, xs[1:]):
            assert left * right < 0
            assert abs(left) == pytest.approx(1.0, abs=1e-5)

    def test_square_well_reflects(self, square_well):
        trajectory = integrate_trajectory(
            h, square_well, state(0.0, 1.0, 0.5), t_end=4.0, dt=1e-3, halt_at_turning=False,
        )
        times = [t for t, _ in trajectory.turning_hits]
        assert times[:2] == pytest.approx([1.0, 3.0], abs=1e-9)

    def test_initial_state_in_wrong_region(self, parabolic_barrier):
        with pytest.raises(RegionMismatchError):
            integrate_trajectory(h, parabolic_barrier, state(0.0, 1.0, 0.5), t_end=1.0, dt=1e-3)

    def test_initial_state_with_wrong_energy(self, harmonic_well):
        with pytest.raises(RegionMismatchError):
            integrate_trajectory(h, harmonic_well, state(0.0, 1.0, 0.9), t_end=1.0, dt=1e-3)

    def test_non_positive_step(self, free_space):
        with pytest.raises(DomainError):
            integrate_trajectory(h, free_space, state(0.0, 1.0, 0.5), t_end=1.0, dt=0.0)

    def test_step_size_error(self, harmonic_well, monkeypatch):
        monkeypatch.setattr(Config, "DRIFT_FACTOR", 1e-6)
        with pytest.raises(StepSizeError):
            integrate_trajectory(h, harmonic_well, state(0.0, 1.0, 0.5), t_end=1.0, dt=0.1)

    def test_times_are_real_and_increasing(self, parabolic_barrier):
        trajectory = integrate_trajectory(H, parabolic_barrier, state(0.0, 1.0, 0.5), t_end=2.0, dt=1e-2)
        assert is_real_time(trajectory)

    def test_rows_carry_energy_defect(self, harmonic_well):
        trajectory = integrate_trajectory(h, harmonic_well, state(0.0, 1.0, 0.5), t_end=0.1, dt=1e-2)
        rows = trajectory.to_rows()
        assert len(rows) == len(trajectory.samples)
        assert rows[0] == (0.0, 0.0, 1.0, 0.0)


class TestHalfPeriod:

    def test_harmonic_well(self, harmonic_well):
        a, b = find_turning_points(harmonic_well, 0.5).points
        period = half_period(h, harmonic_well, 0.5, 1.0, a, b)
        assert period.value == pytest.approx(math.pi, rel=1e-8)
        assert period.method == "gauss-legendre-sin2"
        assert period.quadrature_error < 1e-8

    def test_parabolic_barrier_region(self, parabolic_barrier):
        a, b = find_turning_points(parabolic_barrier, 0.5).points
        assert half_period(H, parabolic_barrier, 0.5, 1.0, a, b).value == pytest.approx(math.pi, rel=1e-8)

    def test_square_well_floor(self, square_well):
        a, b = find_turning_points(square_well, 0.5).points
        assert half_period(h, square_well, 0.5, 1.0, a, b).value == pytest.approx(2.0, rel=1e-9)

    def test_full_period(self, harmonic_well):
        a, b = find_turning_points(harmonic_well, 0.5).points
        assert full_period(h, harmonic_well, 0.5, 1.0, a, b) == pytest.approx(2.0 * math.pi, rel=1e-8)

    def test_tangential_endpoint_diverges(self, parabolic_barrier):
        with pytest.raises(DivergentPeriodError):
            half_period(h, parabolic_barrier, 1.0, 1.0, 0.0, 1.0)

    def test_sign_violation(self, parabolic_barrier):
        a, b = find_turning_points(parabolic_barrier, 0.5).points
        with pytest.raises(RegionMismatchError):
            half_period(h, parabolic_barrier, 0.5, 1.0, a, b)

    def test_reversed_endpoints(self, harmonic_well):
        with pytest.raises(DomainError):
            half_period(h, harmonic_well, 0.5, 1.0, 1.0, -1.0)

    def test_region_survey(self, harmonic_well):
        survey = region_survey(harmonic_well, 0.5)
        assert len(survey) == 1
        assert survey[0].region is h
        assert survey[0].value == pytest.approx(math.pi, rel=1e-8)

    def test_scales_with_square_root_of_mass(self, harmonic_well):
        a, b = find_turning_points(harmonic_well, 0.5).points
        light = half_period(h, harmonic_well, 0.5, 1.0, a, b).value
        heavy = half_period(h, harmonic_well, 0.5, 4.0, a, b).value
        assert heavy / light == pytest.approx(2.0, rel=1e-10)

    def test_shallow_well_survey_on_wide_domain(self):
        spec = PotentialSpec(family="harmonic_well", params={"k": 1.0}, domain=(-100.0, 100.0))
        [period] = region_survey(spec, 1e-6)
        assert period.region is h
        assert period.value == pytest.approx(math.pi, rel=1e-3)


class TestRoundtrip:

    @pytest.mark.parametrize("fixture, region, expected", [
        ("harmonic_well", h, math.pi),
        ("parabolic_barrier", H, math.pi),
        ("square_well", h, 2.0),
    ])
    def test_ode_matches_quadrature(self, request, fixture, region, expected):
        spec = request.getfixturevalue(fixture)
        report = roundtrip_consistency(region, spec, 0.5, 1.0, dt=1e-4)
        assert report.quadrature_time == pytest.approx(expected, rel=1e-8)
        assert report.relative_difference <= 1e-6

    def test_full_barrier_traversal_in_real_time(self, parabolic_barrier):
        b, c = find_turning_points(parabolic_barrier, 0.5).points
        trajectory = integrate_trajectory(
            H, parabolic_barrier, state(b, 0.0, 0.5), t_end=4.0, dt=1e-3,
            halt_at_turning=False, max_hits=1,
        )
        assert is_real_time(trajectory)
        t_hit, x_hit = trajectory.turning_hits[0]
        assert x_hit == pytest.approx(c, abs=1e-5)
        quadrature = half_period(H, parabolic_barrier, 0.5, 1.0, b, c).value
        assert abs(t_hit - quadrature) / quadrature <= 1e-4

    def test_no_bounded_region(self, free_space):
        with pytest.raises(RegionMismatchError):
            roundtrip_consistency(h, free_space, 0.5)
