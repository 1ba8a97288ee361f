"""
Modelos de Dados do Laboratório de Operadores
---------------------------------------------
Funções amostradas em grade uniforme, as duas representações do momento e
os parâmetros relativísticos (ω₀ = m₀c²/ħ).
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

import numpy as np

from utils.error_handling import DomainError

MIN_GRID_POINTS = 8
UNIFORMITY_TOL = 1e-12


class MomentumRep(str, Enum):
    """
    wave: p̂ = -iħ∂ₓ, com [x̂, p̂] = iħ (hermitiano).
    corpuscular: p̂ = -ħ∂ₓ, com [x̂, p̂] = ħ (anti-hermitiano).
    """
    WAVE = "wave"
    CORPUSCULAR = "corpuscular"

    def prefactor(self, hbar: float) -> complex:
        """Coeficiente que multiplica ∂ₓ."""
        return -1j * hbar if self is MomentumRep.WAVE else complex(-hbar)

    def kappa(self, hbar: float) -> complex:
        """Valor esperado do comutador [x̂, p̂]."""
        return 1j * hbar if self is MomentumRep.WAVE else complex(hbar)


@dataclass(frozen=True)
class GridFunction:
    """Amostras complexas em uma grade uniforme."""
    xs: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        xs = np.asarray(self.xs, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        if xs.ndim != 1 or xs.shape != values.shape:
            raise DomainError("xs e values precisam ser vetores do mesmo tamanho.")
        if len(xs) < MIN_GRID_POINTS:
            raise DomainError(f"A grade precisa ter pelo menos {MIN_GRID_POINTS} pontos.")
        steps = np.diff(xs)
        spacing = (xs[-1] - xs[0]) / (len(xs) - 1)
        if spacing <= 0 or np.max(np.abs(steps - spacing)) > UNIFORMITY_TOL * max(abs(xs[0]), abs(xs[-1]), spacing):
            raise DomainError("A grade precisa ser uniforme e crescente.")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "values", values)

    @property
    def spacing(self) -> float:
        return float((self.xs[-1] - self.xs[0]) / (len(self.xs) - 1))

    @property
    def n(self) -> int:
        return len(self.xs)

    def with_values(self, values) -> "GridFunction":
        return GridFunction(self.xs, values)

    @classmethod
    def sample(cls, fn, x_min: float, x_max: float, n: int) -> "GridFunction":
        """Amostra `fn` em n pontos uniformes de [x_min, x_max]."""
        xs = np.linspace(x_min, x_max, n)
        return cls(xs, fn(xs))


@dataclass(frozen=True)
class RepresentationParams:
    """m₀c² = ħω₀. `omega0` é derivado e armazenado na construção."""
    m0: float = 1.0
    c: float = 1.0
    hbar: float = 1.0
    omega0: float = field(init=False)

    def __post_init__(self):
        if self.m0 <= 0 or self.c <= 0 or self.hbar <= 0:
            raise DomainError("m0, c e hbar precisam ser positivos.")
        object.__setattr__(self, "omega0", self.m0 * self.c ** 2 / self.hbar)

    @property
    def rest_energy(self) -> float:
        return self.m0 * self.c ** 2

    def to_dict(self) -> Dict:
        return {"m0": self.m0, "c": self.c, "hbar": self.hbar, "omega0": self.omega0}


@dataclass(frozen=True)
class DefectReport:
    """Defeito medido em uma grade, com a ordem estimada contra a grade anterior."""
    rep: MomentumRep
    grid_n: int
    defect: float
    convergence_order_estimate: Optional[float] = None
    check: str = "hermiticity"

    def to_dict(self) -> Dict:
        order = self.convergence_order_estimate
        return {
            "rep": self.rep.value,
            "check": self.check,
            "grid_n": self.grid_n,
            "defect": self.defect,
            "convergence_order_estimate": order if order is None or math.isfinite(order) else "inf",
        }
