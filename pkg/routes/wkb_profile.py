"""
Subcomando `wkb-profile`
------------------------
Amostra a função de onda WKB (amplitude e fase) em uma região h ou H,
relativa a um ponto de referência.

Constantes: E, x_ref, x_start, x_stop (obrigatórias), n (padrão 201), m0
e hbar. Opções: region (inferida em x_ref quando ausente) e branch
(decaying|growing, só na região H).

CSV: `x,amplitude,phase`. O JSON traz o critério de validade por ponto.
"""

from functools import partial
from typing import Dict, Optional

import click
import numpy as np

from config import Config
from models.dynamics import RegionKind
from models.scan import OutputFormat, Quantity, ScanPoint
from models.wkb import Branch
from physics.potential import infer_region
from physics.wkb import wkb_profile
from utils.commands import (
    emit, load_scan_config, option, require_constant, require_potential, run_points, scan_options,
)
from utils.error_handling import ConfigError

HEADER = ["x", "amplitude", "phase"]
DEFAULT_SAMPLES = 201


def compute_point(point: ScanPoint, region_name: Optional[str] = None, branch: str = Branch.DECAYING.value) -> Dict:
    spec = point.potential
    E = require_constant(point, "E")
    x_ref = require_constant(point, "x_ref")
    x_start = require_constant(point, "x_start")
    x_stop = require_constant(point, "x_stop")
    n = int(point.constants.get("n", DEFAULT_SAMPLES))
    if n < 1:
        raise ConfigError("A constante 'n' precisa ser pelo menos 1.")

    region = RegionKind.parse(region_name) if region_name else infer_region(spec, E, x_ref)
    profile = wkb_profile(
        region, spec, E,
        float(point.constants.get("m0", Config.M0)),
        float(point.constants.get("hbar", Config.HBAR)),
        x_ref, np.linspace(x_start, x_stop, n), branch,
    )
    rows = [dict(zip(HEADER, row)) for row in profile.to_rows()]
    return {"rows": rows, "summary": {"E": E, **profile.to_dict()}}


@click.command("wkb-profile")
@scan_options
def wkb_profile_command(config_path, overrides, output, fmt, jobs):
    """Perfil WKB nas regiões h e H."""
    config = load_scan_config(Quantity.WKB_PROFILE, config_path, overrides, output, fmt)
    require_potential(config)
    compute = partial(
        compute_point,
        region_name=option(config, "region", None, [kind.value for kind in RegionKind]),
        branch=option(config, "branch", Branch.DECAYING.value, [b.value for b in Branch]),
    )
    results = run_points(config, compute, jobs)
    extra = {}
    if config.output.format is OutputFormat.JSON:
        extra["profiles"] = [result["summary"] for result in results]
    emit(config, HEADER, [result["rows"] for result in results], **extra)
