"""
Modelos de Dados para Espalhamento
----------------------------------
Resultados de transmissão/reflexão (exatos ou WKB) e o perfil |ψ|² amostrado
pelo integrador de Numerov.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

import numpy as np


class ScatteringMethod(str, Enum):
    TRANSFER_MATRIX = "transfer_matrix"
    NUMEROV = "numerov"
    WKB_PRIMITIVE = "wkb-primitive"


@dataclass(frozen=True)
class ScatteringResult:
    """
    Probabilidades de transmissão e reflexão para uma energia.

    `log_T` é ln T calculado diretamente do produto renormalizado; continua
    significativo quando T é pequeno demais para um float.
    """
    E: float
    T: float
    R: float
    method: ScatteringMethod
    grid_n: Optional[int] = None
    richardson_defect: Optional[float] = None
    log_T: Optional[float] = None
    S: Optional[float] = None
    hbar: Optional[float] = None

    @property
    def unitarity_defect(self) -> float:
        return abs(self.T + self.R - 1.0)

    @property
    def ln_T(self) -> float:
        """ln T, preferindo o valor em escala logarítmica quando disponível."""
        if self.log_T is not None:
            return self.log_T
        return math.log(self.T) if self.T > 0 else -math.inf

    def to_dict(self) -> Dict:
        payload = {
            "E": self.E,
            "T": self.T,
            "R": self.R,
            "method": self.method.value,
        }
        if self.method is ScatteringMethod.WKB_PRIMITIVE:
            payload.update({"S": self.S, "hbar": self.hbar})
        else:
            payload.update({
                "grid_n": self.grid_n,
                "richardson_defect": self.richardson_defect,
                "log_T": self.log_T,
            })
        return payload


@dataclass(frozen=True)
class WaveProfile:
    """
    |ψ(x)|² amostrado, normalizado pela amplitude incidente.

    `log_scale` é a soma dos logaritmos dos fatores removidos pela
    renormalização (o crescimento total da solução ao atravessar a barreira).
    Como toda a solução é dividida pelo mesmo fator, `density` já é a
    densidade relativa à onda incidente unitária.
    """
    xs: np.ndarray
    density: np.ndarray
    log_scale: float = 0.0

    def to_rows(self) -> List[tuple]:
        return [(float(x), float(d)) for x, d in zip(self.xs, self.density)]

    def to_dict(self) -> Dict:
        return {
            "xs": [float(x) for x in self.xs],
            "density": [float(d) for d in self.density],
            "log_scale": self.log_scale,
        }
