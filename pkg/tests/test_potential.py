import math

import numpy as np
import pytest
from pydantic import ValidationError

from conftest import make_spec
from models.dynamics import RegionKind
from models.potential import PotentialSpec
from physics.potential import breakpoints, derivative, evaluate, find_turning_points, infer_region, peak
from utils.error_handling import DomainError, NonDifferentiableError


class TestEvaluate:

    @pytest.mark.parametrize("x, expected", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (3.0, 0.0)])
    def test_square_barrier_is_left_closed(self, square_barrier, x, expected):
        assert evaluate(square_barrier, x) == expected

    def test_harmonic_well(self, harmonic_well):
        assert evaluate(harmonic_well, 2.0) == pytest.approx(2.0)

    def test_gaussian_peak(self, gaussian_barrier):
        assert evaluate(gaussian_barrier, 0.0) == pytest.approx(1.0)

    def test_eckart_tail_does_not_overflow(self):
        spec = make_spec("eckart", (-10.0, 10.0), V0=1.0, a=0.5)
        assert evaluate(spec, 0.0) == pytest.approx(1.0)
        assert evaluate(spec, 1e4) == 0.0

    def test_tabulated_outside_domain(self):
        spec = PotentialSpec(family="tabulated", params={"xs": [0.0, 1.0, 2.0, 3.0], "vs": [0.0, 1.0, 1.0, 0.0]}, domain=(0.0, 3.0))
        # Quatro amostras simétricas: o spline é a parábola 1.125 - 0.5(x - 1.5)².
        assert evaluate(spec, 1.5) == pytest.approx(1.125)
        with pytest.raises(DomainError):
            evaluate(spec, 3.5)

    def test_vectorized(self, harmonic_well):
        xs = np.array([-1.0, 0.0, 1.0])
        assert np.allclose(evaluate(harmonic_well, xs), [0.5, 0.0, 0.5])


class TestDerivative:

    def test_harmonic_well(self, harmonic_well):
        assert derivative(harmonic_well, 2.0) == pytest.approx(2.0)

    def test_gaussian_peak_is_flat(self, gaussian_barrier):
        assert derivative(gaussian_barrier, 0.0) == pytest.approx(0.0, abs=1e-15)

    def test_parabolic_matches_finite_difference(self, parabolic_barrier):
        h = 1e-6
        fd = (evaluate(parabolic_barrier, 0.5 + h) - evaluate(parabolic_barrier, 0.5 - h)) / (2 * h)
        assert derivative(parabolic_barrier, 0.5) == pytest.approx(-0.5)
        assert derivative(parabolic_barrier, 0.5) == pytest.approx(fd, rel=1e-8)

    def test_square_edge_is_not_differentiable(self, square_barrier):
        with pytest.raises(NonDifferentiableError):
            derivative(square_barrier, 1.0)

    def test_piecewise_node_is_not_differentiable(self, flat_top):
        assert derivative(flat_top, -2.5) == pytest.approx(1.0 / 3.0)
        with pytest.raises(NonDifferentiableError):
            derivative(flat_top, -1.0)

    def test_breakpoints(self, square_barrier, flat_top):
        assert breakpoints(square_barrier) == [-1.0, 1.0]
        assert breakpoints(flat_top) == [-1.0, 1.0]


class TestTurningPoints:

    def test_harmonic_well(self, harmonic_well):
        tps = find_turning_points(harmonic_well, 0.5)
        assert tps.points == pytest.approx([-1.0, 1.0], abs=1e-9)
        assert [r.kind for r in tps.regions] == [RegionKind.H_BARRIER, RegionKind.H_NORMAL, RegionKind.H_BARRIER]
        assert not any(tps.tangential)

    def test_parabolic_barrier(self, parabolic_barrier):
        tps = find_turning_points(parabolic_barrier, 0.5)
        assert tps.points == pytest.approx([-1.0, 1.0], abs=1e-9)
        middle = tps.regions[1]
        assert middle.kind is RegionKind.H_BARRIER
        assert middle.bounded

    def test_energy_above_square_barrier(self, square_barrier):
        tps = find_turning_points(square_barrier, 2.0)
        assert tps.points == []
        assert len(tps.regions) == 1
        assert tps.regions[0].kind is RegionKind.H_NORMAL

    def test_square_edges_are_turning_points(self, square_barrier):
        tps = find_turning_points(square_barrier, 0.5)
        assert tps.points == pytest.approx([-1.0, 1.0], abs=1e-9)

    def test_residual_within_tolerance(self, gaussian_barrier):
        tps = find_turning_points(gaussian_barrier, 0.5)
        for x in tps.points:
            assert abs(evaluate(gaussian_barrier, x) - 0.5) <= 1e-9

    def test_symmetric_potential_gives_symmetric_points(self, gaussian_barrier):
        left, right = find_turning_points(gaussian_barrier, 0.5).points
        assert left == pytest.approx(-right, abs=1e-10)
        assert right == pytest.approx(2.0 * math.sqrt(2.0 * math.log(2.0)), rel=1e-10)

    @pytest.mark.parametrize("family, params", [
        ("harmonic_well", {"k": 1.0}),
        ("parabolic_barrier", {"V0": 1.0, "k": 1.0}),
        ("gaussian_barrier", {"V0": 1.0, "sigma": 2.0}),
        ("eckart", {"V0": 1.0, "a": 1.0}),
    ])
    def test_root_count_stable_under_refinement(self, family, params):
        spec = make_spec(family, (-4.0, 4.0), **params)
        coarse = find_turning_points(spec, 0.37, cells=2048)
        fine = find_turning_points(spec, 0.37, cells=4096)
        assert len(coarse.points) == len(fine.points)

    def test_tangential_peak(self, parabolic_barrier):
        tps = find_turning_points(parabolic_barrier, 1.0)
        assert tps.points == pytest.approx([0.0], abs=1e-6)
        assert tps.tangential == [True]

    def test_flat_top_is_barrier_region(self, flat_top):
        tps = find_turning_points(flat_top, 1.0)
        assert tps.points == pytest.approx([-1.0, 1.0], abs=1e-8)
        flat = [r for r in tps.regions if r.flat]
        assert len(flat) == 1
        assert flat[0].kind is RegionKind.H_BARRIER
        assert tps.bounded_regions() == []

    def test_infinite_energy_is_rejected(self, harmonic_well):
        with pytest.raises(DomainError):
            find_turning_points(harmonic_well, math.inf)

    def test_infer_region(self, parabolic_barrier):
        assert infer_region(parabolic_barrier, 0.5, 0.0) is RegionKind.H_BARRIER
        assert infer_region(parabolic_barrier, 0.5, 2.0) is RegionKind.H_NORMAL

    @pytest.mark.parametrize("half_width", [4.0, 100.0])
    def test_shallow_well_keeps_both_roots(self, half_width):
        spec = make_spec("harmonic_well", (-half_width, half_width), k=1.0)
        tps = find_turning_points(spec, 1e-6)
        x_t = math.sqrt(2e-6)
        assert tps.points == pytest.approx([-x_t, x_t], rel=1e-6)
        assert tps.tangential == [False, False]
        assert [r.kind for r in tps.regions] == [RegionKind.H_BARRIER, RegionKind.H_NORMAL, RegionKind.H_BARRIER]

    def test_roots_between_two_samples(self):
        spec = make_spec("harmonic_well", (-100.0, 100.0), k=1.0, center=0.02)
        tps = find_turning_points(spec, 1e-6)
        x_t = math.sqrt(2e-6)
        assert tps.points == pytest.approx([0.02 - x_t, 0.02 + x_t], abs=1e-9)
        assert tps.tangential == [False, False]
        assert len(tps.bounded_regions(RegionKind.H_NORMAL)) == 1

    def test_tail_level_energy_does_not_mark_domain_edges(self, square_barrier):
        tps = find_turning_points(square_barrier, 0.0)
        assert tps.points == pytest.approx([-1.0, 1.0], abs=1e-9)
        first, last = tps.regions[0], tps.regions[-1]
        assert first.flat and last.flat
        assert first.lo == -6.0 and last.hi == 6.0
        assert not first.bounded_left
        assert not last.bounded_right


class TestPotentialSpec:

    def test_round_trip(self, gaussian_barrier):
        assert PotentialSpec.model_validate(gaussian_barrier.to_dict()) == gaussian_barrier

    @pytest.mark.parametrize("payload", [
        {"family": "square_barrier", "params": {"V0": 1.0, "width": 2.0}, "domain": [1.0, 1.0]},
        {"family": "square_barrier", "params": {"V0": 1.0, "width": -2.0}, "domain": [-1.0, 1.0]},
        {"family": "square_barrier", "params": {"V0": 1.0}, "domain": [-1.0, 1.0]},
        {"family": "square_barrier", "params": {"V0": 1.0, "width": 1.0, "sigma": 1.0}, "domain": [-1.0, 1.0]},
        {"family": "tabulated", "params": {"xs": [0.0, 2.0, 1.0], "vs": [0.0, 1.0, 0.0]}, "domain": [0.0, 1.0]},
        {"family": "volcano", "params": {}, "domain": [-1.0, 1.0]},
    ])
    def test_invalid_specs(self, payload):
        with pytest.raises(ValidationError):
            PotentialSpec.model_validate(payload)

    def test_inverted_and_mirrored(self, gaussian_barrier):
        shifted = gaussian_barrier.with_params(center=1.5)
        assert evaluate(shifted.inverted(), 1.5) == pytest.approx(-1.0)
        assert evaluate(shifted.mirrored(), -1.5) == pytest.approx(1.0)

    def test_peak(self, gaussian_barrier, square_barrier):
        assert peak(gaussian_barrier) == pytest.approx((0.0, 1.0), abs=1e-6)
        assert peak(square_barrier)[1] == 1.0
