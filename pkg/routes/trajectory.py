"""
Subcomando `trajectory`
-----------------------
Integra as equações de movimento em tempo real na região h ou H.

Constantes: x0 (obrigatória), v0 (padrão 0), E (derivada de x0/v0 quando
ausente), m0, dt (padrão 1e-3) e t_end (obrigatória).
Opções: region (h|H, inferida de V(x0) e E quando ausente) e halt
(true|false, parar no primeiro ponto de retorno).

CSV: `t,x,v,energy_defect`.
"""

from functools import partial
from typing import Dict, List, Optional

import click

from config import Config
from models.dynamics import ParticleState, RegionKind
from models.scan import OutputFormat, Quantity, ScanConfig, ScanPoint
from physics.dynamics import energy_function, integrate_trajectory
from physics.potential import evaluate, infer_region
from utils.commands import (
    emit, load_scan_config, option, require_constant, require_potential, run_points, scan_options,
)

HEADER = ["t", "x", "v", "energy_defect"]
DEFAULT_DT = 1e-3


def initial_state(point: ScanPoint, region_name: Optional[str] = None):
    """Resolve região e estado inicial a partir das constantes do ponto."""
    spec = point.potential
    x0 = require_constant(point, "x0")
    v0 = float(point.constants.get("v0", 0.0))
    m0 = float(point.constants.get("m0", Config.M0))
    if "E" in point.constants:
        E = float(point.constants["E"])
        region = RegionKind.parse(region_name) if region_name else infer_region(spec, E, x0)
    else:
        # Sem E, a região (padrão h) define qual função de energia é conservada.
        region = RegionKind.parse(region_name or RegionKind.H_NORMAL.value)
        E = energy_function(region, evaluate(spec, x0), v0, m0)
    return region, ParticleState(t=0.0, x=x0, v=v0, m0=m0, E=E)


def compute_point(point: ScanPoint, region_name: Optional[str] = None, halt: bool = True) -> Dict:
    region, state0 = initial_state(point, region_name)
    t_end = require_constant(point, "t_end")
    dt = float(point.constants.get("dt", DEFAULT_DT))
    trajectory = integrate_trajectory(region, point.potential, state0, t_end, dt, halt_at_turning=halt)
    rows = [dict(zip(HEADER, row)) for row in trajectory.to_rows()]
    return {"rows": rows, "summary": {"E": state0.E, **trajectory.to_dict()}}


def _options(config: ScanConfig):
    region_name = option(config, "region", None, [kind.value for kind in RegionKind])
    halt = option(config, "halt", "true", ["true", "false"]) == "true"
    return {"region_name": region_name, "halt": halt}


@click.command("trajectory")
@scan_options
def trajectory_command(config_path, overrides, output, fmt, jobs):
    """Trajetória clássica (velocity-Verlet) em tempo real."""
    config = load_scan_config(Quantity.TRAJECTORY, config_path, overrides, output, fmt)
    require_potential(config)
    results: List[Dict] = run_points(config, partial(compute_point, **_options(config)), jobs)
    extra = {}
    if config.output.format is OutputFormat.JSON:
        extra["trajectories"] = [result["summary"] for result in results]
    emit(config, HEADER, [result["rows"] for result in results], **extra)
