from .potential import evaluate, derivative, find_turning_points, breakpoints, peak, build_potential, infer_region
from .dynamics import (
    energy_function, speed_from_energy, integrate_trajectory,
    half_period, full_period, region_survey, roundtrip_consistency,
)
from .wkb import wkb_profile, barrier_action, wkb_transmission, log_transmission_fit
from .exact import exact_transmission, bound_profile
from .operators import (
    momentum_apply, hermiticity_defect, commutator_defect, eigenvalue_estimate,
    convergence_study, mass_transform, moving_frequency, moving_energy,
)

__all__ = [
    "evaluate", "derivative", "find_turning_points", "breakpoints", "peak", "build_potential", "infer_region",
    "energy_function", "speed_from_energy", "integrate_trajectory",
    "half_period", "full_period", "region_survey", "roundtrip_consistency",
    "wkb_profile", "barrier_action", "wkb_transmission", "log_transmission_fit",
    "exact_transmission", "bound_profile",
    "momentum_apply", "hermiticity_defect", "commutator_defect", "eigenvalue_estimate",
    "convergence_study", "mass_transform", "moving_frequency", "moving_energy",
]
