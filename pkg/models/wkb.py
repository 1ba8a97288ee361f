"""
Modelos de Dados da Aproximação WKB
-----------------------------------
Perfil de amplitude/fase relativo a um ponto de referência e o resultado da
integral de ação sob a barreira.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List

import numpy as np

from models.dynamics import RegionKind


class Branch(str, Enum):
    """Ramo da solução sob a barreira: exponencial decrescente ou crescente."""
    DECAYING = "decaying"
    GROWING = "growing"

    @property
    def sign(self) -> float:
        return -1.0 if self is Branch.DECAYING else 1.0


@dataclass(frozen=True)
class WkbProfile:
    """
    |ψ(x)| / |ψ(x_ref)| e fase acumulada. O fator temporal exp(-iEt/ħ) não é
    armazenado.
    """
    xs: np.ndarray
    amplitude: np.ndarray
    phase: np.ndarray
    region: RegionKind
    x_ref: float
    hbar: float
    branch: Branch = Branch.DECAYING
    validity: float = 0.0

    def to_rows(self) -> List[tuple]:
        """Linhas do CSV `x,amplitude,phase`."""
        return [
            (float(x), float(a), float(p))
            for x, a, p in zip(self.xs, self.amplitude, self.phase)
        ]

    def to_dict(self) -> Dict:
        return {
            "region": self.region.value,
            "branch": self.branch.value,
            "x_ref": self.x_ref,
            "hbar": self.hbar,
            "validity": self.validity,
        }


@dataclass(frozen=True)
class ActionResult:
    """S = ∫_b^c √(2m₀(V-E)) dx. `degenerate` marca pontos de retorno coincidentes."""
    S: float
    b: float
    c: float
    quadrature_error: float
    degenerate: bool = False

    def to_dict(self) -> Dict:
        return {
            "S": self.S,
            "b": self.b,
            "c": self.c,
            "quadrature_error": self.quadrature_error,
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class LogTransmissionFit:
    """Ajuste linear ln T = slope / ħ + intercept."""
    slope: float
    intercept: float
    hbars: List[float]
    log_T: List[float]

    def to_dict(self) -> Dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "hbars": list(self.hbars),
            "log_T": list(self.log_T),
        }
