"""
Subcomando `turning-points`
---------------------------
Localiza os pontos de retorno V(x) = E e classifica as regiões h/H entre
eles para cada ponto da varredura.

CSV: `E,x,tangential` (uma linha por ponto de retorno).
JSON: uma entrada por energia, com pontos e regiões.
"""

from typing import Dict, List

import click

from models.scan import OutputFormat, Quantity, ScanPoint
from physics.potential import find_turning_points
from utils.commands import emit, load_scan_config, require_constant, require_potential, run_points, scan_options

HEADER = ["E", "x", "tangential"]


def compute_point(point: ScanPoint) -> Dict:
    E = require_constant(point, "E")
    return find_turning_points(point.potential, E).to_dict()


def to_rows(result: Dict) -> List[Dict]:
    return [
        {"E": result["E"], "x": x, "tangential": tangent}
        for x, tangent in zip(result["points"], result["tangential"])
    ]


@click.command("turning-points")
@scan_options
def turning_points_command(config_path, overrides, output, fmt, jobs):
    """Pontos de retorno e classificação das regiões."""
    config = load_scan_config(Quantity.TURNING_POINTS, config_path, overrides, output, fmt)
    require_potential(config)
    results = run_points(config, compute_point, jobs)
    if config.output.format is OutputFormat.JSON:
        emit(config, HEADER, [[result] for result in results])
    else:
        emit(config, HEADER, [to_rows(result) for result in results])
