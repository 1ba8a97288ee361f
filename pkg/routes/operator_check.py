"""
Subcomando `operator-check`
---------------------------
Certifica os operadores de momento discretizados sob refinamento de grade.

Constantes: grid_n (padrão 256 pontos), doublings (padrão 3), hbar e o
momento p da autofunção e^{-px/ħ}: `momentum`, ou p = √(2m₀(V0 - E))
quando V0 e E são dados.
Opções: rep (wave|corpuscular|both) e check
(hermiticity|commutator|eigenvalue|all).

CSV: `rep,check,grid_n,defect,convergence_order_estimate`.
"""

import math
from functools import partial
from typing import Dict, List

import click

from config import Config
from models.operators import MomentumRep
from models.scan import Quantity, ScanPoint
from physics.operators import CHECKS, convergence_study
from utils.commands import emit, load_scan_config, option, run_points, scan_options
from utils.error_handling import ConfigError

HEADER = ["rep", "check", "grid_n", "defect", "convergence_order_estimate"]
DEFAULT_GRID_N = 256
DEFAULT_DOUBLINGS = 3


def eigen_momentum(point: ScanPoint) -> float:
    constants = point.constants
    if "V0" in constants and "E" in constants:
        excess = float(constants["V0"]) - float(constants["E"])
        if excess < 0:
            raise ConfigError("A autofunção da barreira plana exige E <= V0.")
        return math.sqrt(2.0 * float(constants.get("m0", Config.M0)) * excess)
    return float(constants.get("momentum", 1.0))


def compute_point(point: ScanPoint, reps: List[str], checks: List[str]) -> List[Dict]:
    grid_n = int(point.constants.get("grid_n", DEFAULT_GRID_N))
    doublings = int(point.constants.get("doublings", DEFAULT_DOUBLINGS))
    if doublings < 0:
        raise ConfigError("A constante 'doublings' não pode ser negativa.")
    hbar = float(point.constants.get("hbar", Config.HBAR))
    grids = [grid_n * 2 ** k for k in range(doublings + 1)]

    rows = []
    for rep in reps:
        for check in checks:
            reports = convergence_study(rep, check, grids, hbar=hbar, momentum=eigen_momentum(point))
            rows.extend(report.to_dict() for report in reports)
    return rows


@click.command("operator-check")
@scan_options
def operator_check_command(config_path, overrides, output, fmt, jobs):
    """Defeitos de hermiticidade, comutador e autovalor sob refinamento."""
    config = load_scan_config(Quantity.OPERATOR_CHECK, config_path, overrides, output, fmt)
    rep = option(config, "rep", "both", [r.value for r in MomentumRep] + ["both"])
    check = option(config, "check", "all", list(CHECKS) + ["all"])
    reps = [r.value for r in MomentumRep] if rep == "both" else [rep]
    checks = list(CHECKS) if check == "all" else [check]
    emit(config, HEADER, run_points(config, partial(compute_point, reps=reps, checks=checks), jobs))
