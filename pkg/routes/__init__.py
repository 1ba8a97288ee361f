from .mass_transform import mass_transform_command
from .operator_check import operator_check_command
from .period import period_command
from .trajectory import trajectory_command
from .transmission_scan import transmission_scan_command
from .turning_points import turning_points_command
from .wkb_profile import wkb_profile_command

__all__ = [
    "turning_points_command", "trajectory_command", "period_command", "wkb_profile_command",
    "transmission_scan_command", "operator_check_command", "mass_transform_command",
]
