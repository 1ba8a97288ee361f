"""
Subcomando `period`
-------------------
Meio-período por quadratura com substituição sin² entre dois pontos de
retorno consecutivos.

Constantes: E (obrigatória), m0, e opcionalmente a/b. Sem a/b, cada região
limitada por pontos de retorno entra como uma linha (regiões com extremo
tangente saem com valor infinito e método "divergent").
Opções: region (h|H) filtra as regiões ou fixa a região de [a, b].

CSV: `E,value,quadrature_error,method,region,a,b`.
"""

from functools import partial
from typing import Dict, List, Optional

import click

from config import Config
from models.dynamics import RegionKind
from models.scan import Quantity, ScanPoint
from physics.dynamics import half_period, region_survey
from physics.potential import infer_region
from utils.commands import (
    emit, load_scan_config, option, require_constant, require_potential, run_points, scan_options,
)
from utils.error_handling import ConfigError, RegionMismatchError

HEADER = ["E", "value", "quadrature_error", "method", "region", "a", "b"]


def compute_point(point: ScanPoint, region_name: Optional[str] = None) -> List[Dict]:
    spec = point.potential
    E = require_constant(point, "E")
    m0 = float(point.constants.get("m0", Config.M0))
    has_a, has_b = "a" in point.constants, "b" in point.constants
    if has_a != has_b:
        raise ConfigError("As constantes 'a' e 'b' precisam vir juntas.")

    if has_a:
        a, b = float(point.constants["a"]), float(point.constants["b"])
        region = RegionKind.parse(region_name) if region_name else infer_region(spec, E, 0.5 * (a + b))
        periods = [half_period(region, spec, E, m0, a, b)]
    else:
        periods = region_survey(spec, E, m0)
        if region_name:
            periods = [hp for hp in periods if hp.region is RegionKind.parse(region_name)]
        if not periods:
            raise RegionMismatchError(
                f"Nenhuma região limitada por dois pontos de retorno para E = {E}.",
                details={"E": E},
            )
    return [{"E": E, **hp.to_dict()} for hp in periods]


@click.command("period")
@scan_options
def period_command(config_path, overrides, output, fmt, jobs):
    """Meio-período T_h/T_H por quadratura."""
    config = load_scan_config(Quantity.PERIOD, config_path, overrides, output, fmt)
    require_potential(config)
    region_name = option(config, "region", None, [kind.value for kind in RegionKind])
    emit(config, HEADER, run_points(config, partial(compute_point, region_name=region_name), jobs))
