"""
Modelos de Dados para a Dinâmica Clássica
-----------------------------------------
Este módulo define os tipos que descrevem o movimento real no tempo nas duas
representações: a região normal `h` (E >= V, energia cinética positiva) e a
região de barreira `H` (E <= V, energia cinética negativa).
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple


class RegionKind(str, Enum):
    """
    Rótulo da região: seleciona a função energia, a lei de força e a regra
    de quantização.
    """
    H_NORMAL = "h"
    H_BARRIER = "H"

    @property
    def kinetic_sign(self) -> float:
        """+1 para h = ½m₀v² + V, -1 para H = -½m₀v² + V."""
        return 1.0 if self is RegionKind.H_NORMAL else -1.0

    @property
    def force_sign(self) -> float:
        """-1 para m₀ẍ = -dV/dx (região h), +1 para m₀ẍ = +dV/dx (região H)."""
        return -1.0 if self is RegionKind.H_NORMAL else 1.0

    def excess(self, E: float, V: float) -> float:
        """Quantidade que precisa ser não negativa na região: E - V (h) ou V - E (H)."""
        return E - V if self is RegionKind.H_NORMAL else V - E

    @classmethod
    def parse(cls, value: "str | RegionKind") -> "RegionKind":
        """Aceita o rótulo curto ("h"/"H") ou o nome do membro."""
        if isinstance(value, RegionKind):
            return value
        for member in cls:
            if value in (member.value, member.name, member.name.lower()):
                return member
        raise ValueError(f"Região desconhecida: {value!r}. Use 'h' ou 'H'.")


@dataclass(frozen=True)
class ParticleState:
    """Estado instantâneo da partícula. O tempo é sempre um número real."""
    t: float
    x: float
    v: float
    m0: float
    E: float

    def to_dict(self) -> Dict[str, float]:
        return {"t": self.t, "x": self.x, "v": self.v, "m0": self.m0, "E": self.E}


@dataclass
class Trajectory:
    """
    Amostras (t, x, v) ordenadas no tempo, todas na mesma região.

    `status` vale "completed" quando t_end foi atingido e "turning_point"
    quando a integração parou em um ponto de retorno. `turning_hits` guarda
    (t, x) de cada ponto de retorno atravessado quando a integração não para.
    """
    samples: List[ParticleState]
    region: RegionKind
    energy_drift: float
    defects: List[float] = field(default_factory=list)
    status: str = "completed"
    turning_time: Optional[float] = None
    turning_x: Optional[float] = None
    turning_hits: List[Tuple[float, float]] = field(default_factory=list)

    @property
    def times(self) -> List[float]:
        return [sample.t for sample in self.samples]

    @property
    def final(self) -> ParticleState:
        return self.samples[-1]

    def to_rows(self) -> List[Tuple[float, float, float, float]]:
        """Linhas do CSV `t,x,v,energy_defect`."""
        return [
            (sample.t, sample.x, sample.v, defect)
            for sample, defect in zip(self.samples, self.defects)
        ]

    def to_dict(self) -> Dict:
        return {
            "region": self.region.value,
            "status": self.status,
            "energy_drift": self.energy_drift,
            "n_samples": len(self.samples),
            "turning_time": self.turning_time,
            "turning_x": self.turning_x,
            "turning_hits": [list(hit) for hit in self.turning_hits],
        }


@dataclass(frozen=True)
class HalfPeriod:
    """Meio-período entre dois pontos de retorno consecutivos."""
    value: float
    quadrature_error: float
    method: str
    region: RegionKind
    a: float
    b: float

    def to_dict(self) -> Dict:
        return {
            "value": self.value,
            "quadrature_error": self.quadrature_error,
            "method": self.method,
            "region": self.region.value,
            "a": self.a,
            "b": self.b,
        }


@dataclass(frozen=True)
class RoundtripReport:
    """Comparação entre o tempo de travessia da EDO e o meio-período da quadratura."""
    region: RegionKind
    a: float
    b: float
    ode_time: float
    quadrature_time: float
    dt: float

    @property
    def relative_difference(self) -> float:
        return abs(self.ode_time - self.quadrature_time) / abs(self.quadrature_time)

    def to_dict(self) -> Dict:
        return {
            "region": self.region.value,
            "a": self.a,
            "b": self.b,
            "ode_time": self.ode_time,
            "quadrature_time": self.quadrature_time,
            "relative_difference": self.relative_difference,
            "dt": self.dt,
        }


def is_real_time(trajectory: Trajectory) -> bool:
    """Todos os tempos são floats reais, finitos e estritamente crescentes."""
    times = trajectory.times
    if not all(isinstance(t, float) and math.isfinite(t) for t in times):
        return False
    return all(later > earlier for earlier, later in zip(times, times[1:]))
