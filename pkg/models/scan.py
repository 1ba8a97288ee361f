"""
Modelos de Validação da Configuração de Varreduras (Pydantic)
-------------------------------------------------------------
Este módulo define o `ScanConfig`, a única fonte serializável de uma
execução da CLI: potencial, quantidade calculada, parâmetro varrido,
constantes fixas, opções de enumeração e destino da saída.

Também implementa os overrides `--set chave.pontilhada=valor`, aplicados ao
JSON bruto antes da validação.
"""

import json
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from models.potential import PotentialSpec
from utils.error_handling import ConfigError


class Quantity(str, Enum):
    TURNING_POINTS = "turning_points"
    TRAJECTORY = "trajectory"
    PERIOD = "period"
    WKB_PROFILE = "wkb_profile"
    TRANSMISSION_SCAN = "transmission_scan"
    OPERATOR_CHECK = "operator_check"
    MASS_TRANSFORM = "mass_transform"

    @property
    def command_name(self) -> str:
        return self.value.replace("_", "-")


class Spacing(str, Enum):
    LINEAR = "linear"
    LOG = "log"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class Sweep(BaseModel):
    """Um único parâmetro varrido em `count` pontos de start a stop."""
    model_config = ConfigDict(extra="forbid")

    parameter: str = Field(min_length=1)
    start: float
    stop: Optional[float] = None
    count: int = Field(default=1, ge=1)
    spacing: Spacing = Spacing.LINEAR

    @model_validator(mode="after")
    def check_range(self) -> "Sweep":
        """Garante start < stop quando há mais de um ponto e start > 0 na escala log."""
        if self.count > 1:
            if self.stop is None or not self.start < self.stop:
                raise ValueError("Uma varredura com count > 1 precisa de start < stop.")
        if self.spacing is Spacing.LOG and (self.start <= 0 or (self.stop is not None and self.stop <= 0)):
            raise ValueError("A escala log exige start e stop positivos.")
        return self

    def values(self) -> List[float]:
        """Valores da varredura em ordem crescente de índice."""
        if self.count == 1:
            return [float(self.start)]
        if self.spacing is Spacing.LOG:
            grid = np.geomspace(self.start, self.stop, self.count)
        else:
            grid = np.linspace(self.start, self.stop, self.count)
        return [float(v) for v in grid]


class OutputSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    path: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV


class ScanConfig(BaseModel):
    """
    Valida o JSON de configuração recebido via `--config`.
    """
    model_config = ConfigDict(extra="forbid")

    potential: Optional[PotentialSpec] = None
    quantity: Quantity
    sweep: Optional[Sweep] = None
    constants: Dict[str, float] = Field(default_factory=dict)
    options: Dict[str, str] = Field(default_factory=dict)
    output: OutputSpec = Field(default_factory=OutputSpec)

    @field_validator("options", mode="before")
    @classmethod
    def stringify_options(cls, value: Any) -> Any:
        """`--set options.halt=false` chega como bool do JSON; as opções são sempre texto."""
        if not isinstance(value, dict):
            return value
        return {
            key: (str(item).lower() if isinstance(item, bool) else str(item))
            for key, item in value.items()
        }

    def points(self) -> List["ScanPoint"]:
        """
        Expande a varredura em pontos independentes, na ordem do índice.

        Um parâmetro presente em `potential.params` substitui esse parâmetro
        do potencial; qualquer outro nome vira uma constante.
        """
        if self.sweep is None:
            return [ScanPoint(0, None, self.potential, dict(self.constants))]

        points = []
        name = self.sweep.parameter
        for index, value in enumerate(self.sweep.values()):
            potential = self.potential
            constants = dict(self.constants)
            if potential is not None and name in potential.params:
                potential = potential.with_params(**{name: value})
            else:
                constants[name] = value
            points.append(ScanPoint(index, value, potential, constants))
        return points


@dataclass(frozen=True)
class ScanPoint:
    """Um ponto já resolvido da varredura, pronto para ser despachado."""
    index: int
    value: Optional[float]
    potential: Optional[PotentialSpec]
    constants: Dict[str, float]


def parse_override(item: str) -> tuple:
    """Separa "a.b.c=valor" em (["a", "b", "c"], valor decodificado como JSON)."""
    if "=" not in item:
        raise ConfigError(f"Override inválido '{item}'. Use chave=valor.")
    key, raw = item.split("=", 1)
    path = [part for part in key.strip().split(".") if part]
    if not path:
        raise ConfigError(f"Override sem chave: '{item}'.")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return path, value


def apply_overrides(raw: Dict[str, Any], overrides: List[str]) -> Dict[str, Any]:
    """Aplica overrides `--set` sobre o JSON bruto (cópia profunda via JSON)."""
    data = json.loads(json.dumps(raw))
    for item in overrides:
        path, value = parse_override(item)
        node = data
        for part in path[:-1]:
            child = node.get(part)
            if child is None:
                child = node[part] = {}
            if not isinstance(child, dict):
                raise ConfigError(f"Override '{item}' atravessa um valor que não é objeto.")
            node = child
        node[path[-1]] = value
    return data


__all__ = [
    "Quantity", "Spacing", "OutputFormat", "Sweep", "OutputSpec",
    "ScanConfig", "ScanPoint", "parse_override", "apply_overrides",
]
