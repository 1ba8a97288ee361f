"""
Subcomando `mass-transform`
---------------------------
As duas leis de transformação da massa e da frequência interna em função
da velocidade v (normalmente varrida).

Constantes: v, m0 (padrão 1), c (padrão 1), hbar (padrão 1).

CSV: `v,m_wave,m_corpuscular,product,omega_wave,omega_corpuscular`.
"""

from typing import Dict, List

import click

from models.operators import MomentumRep, RepresentationParams
from models.scan import Quantity, ScanPoint
from physics.operators import mass_transform, moving_frequency
from utils.commands import emit, load_scan_config, require_constant, run_points, scan_options

HEADER = ["v", "m_wave", "m_corpuscular", "product", "omega_wave", "omega_corpuscular"]


def compute_point(point: ScanPoint) -> List[Dict]:
    v = require_constant(point, "v")
    params = RepresentationParams(
        m0=float(point.constants.get("m0", 1.0)),
        c=float(point.constants.get("c", 1.0)),
        hbar=float(point.constants.get("hbar", 1.0)),
    )
    m_wave = mass_transform(MomentumRep.WAVE, params.m0, v, params.c)
    m_corpuscular = mass_transform(MomentumRep.CORPUSCULAR, params.m0, v, params.c)
    return [{
        "v": v,
        "m_wave": m_wave,
        "m_corpuscular": m_corpuscular,
        "product": m_wave * m_corpuscular,
        "omega_wave": moving_frequency(MomentumRep.WAVE, params, v),
        "omega_corpuscular": moving_frequency(MomentumRep.CORPUSCULAR, params, v),
    }]


@click.command("mass-transform")
@scan_options
def mass_transform_command(config_path, overrides, output, fmt, jobs):
    """Leis de massa m = m₀/√(1-v²/c²) e M = m₀√(1-v²/c²)."""
    config = load_scan_config(Quantity.MASS_TRANSFORM, config_path, overrides, output, fmt)
    emit(config, HEADER, run_points(config, compute_point, jobs))
