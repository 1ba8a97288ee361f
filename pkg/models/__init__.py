from .dynamics import RegionKind, ParticleState, Trajectory, HalfPeriod, RoundtripReport
from .potential import PotentialFamily, PotentialSpec, RegionInterval, TurningPoints
from .scattering import ScatteringMethod, ScatteringResult, WaveProfile
from .wkb import Branch, WkbProfile, ActionResult, LogTransmissionFit
from .operators import MomentumRep, GridFunction, RepresentationParams, DefectReport
from .scan import Quantity, ScanConfig, Sweep, OutputSpec

__all__ = [
    "RegionKind", "ParticleState", "Trajectory", "HalfPeriod", "RoundtripReport",
    "PotentialFamily", "PotentialSpec", "RegionInterval", "TurningPoints",
    "ScatteringMethod", "ScatteringResult", "WaveProfile",
    "Branch", "WkbProfile", "ActionResult", "LogTransmissionFit",
    "MomentumRep", "GridFunction", "RepresentationParams", "DefectReport",
    "Quantity", "ScanConfig", "Sweep", "OutputSpec",
]
