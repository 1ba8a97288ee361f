"""
Subcomando `transmission-scan`
------------------------------
Junta, por energia, a transmissão exata e a estimativa WKB primitiva.

Constantes: E (em geral varrida), m0, hbar e grid_n.
Opções: method (transfer_matrix|numerov) para o solver exato.

CSV: `E,T_exact,R,T_wkb,S,2S_over_hbar,richardson_defect`. Acima do pico da
barreira não existe região proibida: T_wkb = 1 e S = 0.
"""

from functools import partial
from typing import Dict, List

import click

from config import Config
from models.scan import Quantity, ScanPoint
from models.scattering import ScatteringMethod
from physics.exact import exact_transmission
from physics.potential import peak
from physics.wkb import wkb_transmission
from utils.commands import (
    emit, load_scan_config, option, require_constant, require_potential, run_points, scan_options,
)

HEADER = ["E", "T_exact", "R", "T_wkb", "S", "2S_over_hbar", "richardson_defect"]
EXACT_METHODS = [ScatteringMethod.TRANSFER_MATRIX.value, ScatteringMethod.NUMEROV.value]


def compute_point(point: ScanPoint, method: str = ScatteringMethod.TRANSFER_MATRIX.value) -> List[Dict]:
    spec = point.potential
    E = require_constant(point, "E")
    m0 = float(point.constants.get("m0", Config.M0))
    hbar = float(point.constants.get("hbar", Config.HBAR))
    grid_n = int(point.constants.get("grid_n", Config.GRID_N))

    exact = exact_transmission(spec, E, m0, hbar, grid_n, method=method)
    _, V_max = peak(spec)
    if E > V_max:
        T_wkb, S = 1.0, 0.0
    else:
        wkb = wkb_transmission(spec, E, m0, hbar)
        T_wkb, S = wkb.T, wkb.S
    return [{
        "E": E,
        "T_exact": exact.T,
        "R": exact.R,
        "T_wkb": T_wkb,
        "S": S,
        "2S_over_hbar": 2.0 * S / hbar,
        "richardson_defect": exact.richardson_defect,
    }]


@click.command("transmission-scan")
@scan_options
def transmission_scan_command(config_path, overrides, output, fmt, jobs):
    """Varredura de transmissão: exata contra WKB."""
    config = load_scan_config(Quantity.TRANSMISSION_SCAN, config_path, overrides, output, fmt)
    require_potential(config)
    method = option(config, "method", ScatteringMethod.TRANSFER_MATRIX.value, EXACT_METHODS)
    emit(config, HEADER, run_points(config, partial(compute_point, method=method), jobs))
