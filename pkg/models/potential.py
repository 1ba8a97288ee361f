"""
Modelos de Dados para Potenciais
--------------------------------
Este módulo define a descrição declarativa de um potencial 1D
(`PotentialSpec`) e o resultado da localização de pontos de retorno
(`TurningPoints`).

`PotentialSpec` é um modelo pydantic: ele valida o JSON
{"family": ..., "params": {...}, "domain": [x_min, x_max]} recebido pela CLI
e faz o caminho de volta sem perdas através de `to_dict()`.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from models.dynamics import RegionKind


class PotentialFamily(str, Enum):
    """Famílias do catálogo de potenciais."""
    CONSTANT = "constant"
    SQUARE_BARRIER = "square_barrier"
    SQUARE_WELL = "square_well"
    PARABOLIC_BARRIER = "parabolic_barrier"
    HARMONIC_WELL = "harmonic_well"
    ECKART = "eckart"
    GAUSSIAN_BARRIER = "gaussian_barrier"
    PIECEWISE_LINEAR = "piecewise_linear"
    TABULATED = "tabulated"


# --- Parâmetros por família: (obrigatórios, opcionais com valor padrão) ---
FAMILY_PARAMS: Dict[PotentialFamily, Tuple[Tuple[str, ...], Dict[str, float]]] = {
    PotentialFamily.CONSTANT: (("V0",), {}),
    PotentialFamily.SQUARE_BARRIER: (("V0", "width"), {"center": 0.0}),
    PotentialFamily.SQUARE_WELL: (("V0", "width"), {"center": 0.0}),
    PotentialFamily.PARABOLIC_BARRIER: (("V0", "k"), {"center": 0.0}),
    PotentialFamily.HARMONIC_WELL: (("k",), {"center": 0.0}),
    PotentialFamily.ECKART: (("V0", "a"), {"center": 0.0}),
    PotentialFamily.GAUSSIAN_BARRIER: (("V0", "sigma"), {"center": 0.0}),
    PotentialFamily.PIECEWISE_LINEAR: (("xs", "vs"), {}),
    PotentialFamily.TABULATED: (("xs", "vs"), {}),
}

# Parâmetros de largura/escala que precisam ser estritamente positivos.
POSITIVE_PARAMS = {"width", "k", "a", "sigma"}

SAMPLED_FAMILIES = {PotentialFamily.PIECEWISE_LINEAR, PotentialFamily.TABULATED}


class PotentialSpec(BaseModel):
    """
    Valida e descreve um potencial V(x) = scale * V_família(x) em [x_min, x_max].
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    family: PotentialFamily
    params: Dict[str, Union[float, List[float]]] = Field(default_factory=dict)
    domain: Tuple[float, float]
    scale: float = 1.0

    @field_validator("domain")
    @classmethod
    def check_domain(cls, v: Tuple[float, float]) -> Tuple[float, float]:
        """Garante um domínio não degenerado (x_min < x_max)."""
        if not v[0] < v[1]:
            raise ValueError("O domínio precisa satisfazer x_min < x_max.")
        return v

    @model_validator(mode="after")
    def check_params(self) -> "PotentialSpec":
        """Confere nomes, tipos e sinais dos parâmetros da família."""
        required, optional = FAMILY_PARAMS[self.family]
        allowed = set(required) | set(optional)
        missing = [name for name in required if name not in self.params]
        if missing:
            raise ValueError(f"Parâmetros ausentes para '{self.family.value}': {missing}")
        unknown = sorted(set(self.params) - allowed)
        if unknown:
            raise ValueError(f"Parâmetros desconhecidos para '{self.family.value}': {unknown}")

        if self.family in SAMPLED_FAMILIES:
            xs, vs = self.params["xs"], self.params["vs"]
            if not isinstance(xs, list) or not isinstance(vs, list):
                raise ValueError("'xs' e 'vs' precisam ser listas de números.")
            if len(xs) != len(vs) or len(xs) < 2:
                raise ValueError("'xs' e 'vs' precisam ter o mesmo tamanho (>= 2).")
            if any(b <= a for a, b in zip(xs, xs[1:])):
                raise ValueError("As amostras 'xs' precisam ser estritamente crescentes.")
            if self.family is PotentialFamily.TABULATED:
                if self.domain[0] < xs[0] or self.domain[1] > xs[-1]:
                    raise ValueError("O domínio de um potencial tabulado precisa estar coberto pelas amostras.")
        else:
            for name, value in self.params.items():
                if isinstance(value, list):
                    raise ValueError(f"O parâmetro '{name}' precisa ser um número.")
                if name in POSITIVE_PARAMS and not value > 0:
                    raise ValueError(f"O parâmetro '{name}' precisa ser estritamente positivo.")
        return self

    def param(self, name: str) -> float:
        """Valor de um parâmetro escalar, com o padrão da família quando omitido."""
        if name in self.params:
            return float(self.params[name])
        return float(FAMILY_PARAMS[self.family][1][name])

    @property
    def width(self) -> float:
        return self.domain[1] - self.domain[0]

    def inverted(self) -> "PotentialSpec":
        """O potencial invertido V(x) -> -V(x)."""
        return self.model_copy(update={"scale": -self.scale})

    def mirrored(self) -> "PotentialSpec":
        """O potencial espelhado x -> -x."""
        domain = (-self.domain[1], -self.domain[0])
        if self.family in SAMPLED_FAMILIES:
            params = {
                "xs": [-x for x in reversed(self.params["xs"])],
                "vs": list(reversed(self.params["vs"])),
            }
        else:
            params = dict(self.params)
            if "center" in FAMILY_PARAMS[self.family][1]:
                params["center"] = -self.param("center")
        return PotentialSpec(family=self.family, params=params, domain=domain, scale=self.scale)

    def with_params(self, **updates: float) -> "PotentialSpec":
        """Cópia validada com parâmetros alterados."""
        params = dict(self.params)
        params.update(updates)
        return PotentialSpec(family=self.family, params=params, domain=self.domain, scale=self.scale)

    def to_dict(self) -> Dict:
        """Serializa no formato JSON documentado da CLI."""
        payload = {
            "family": self.family.value,
            "params": {k: (list(v) if isinstance(v, list) else v) for k, v in self.params.items()},
            "domain": [self.domain[0], self.domain[1]],
        }
        if self.scale != 1.0:
            payload["scale"] = self.scale
        return payload


@dataclass(frozen=True)
class RegionInterval:
    """Intervalo do domínio entre pontos de retorno consecutivos."""
    lo: float
    hi: float
    kind: RegionKind
    bounded_left: bool = False
    bounded_right: bool = False
    flat: bool = False

    @property
    def bounded(self) -> bool:
        """Limitado por pontos de retorno dos dois lados."""
        return self.bounded_left and self.bounded_right

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def to_dict(self) -> Dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "kind": self.kind.value,
            "bounded": self.bounded,
            "flat": self.flat,
        }


@dataclass(frozen=True)
class TurningPoints:
    """Pontos onde V(x) = E e a classificação h/H dos intervalos entre eles."""
    E: float
    points: List[float]
    tangential: List[bool]
    regions: List[RegionInterval]
    tol_x: float

    def bounded_regions(self, kind: RegionKind | None = None) -> List[RegionInterval]:
        """Regiões limitadas por dois pontos de retorno, opcionalmente filtradas por tipo."""
        return [
            region for region in self.regions
            if region.bounded and not region.flat and (kind is None or region.kind is kind)
        ]

    def to_dict(self) -> Dict:
        return {
            "E": self.E,
            "points": list(self.points),
            "tangential": list(self.tangential),
            "regions": [region.to_dict() for region in self.regions],
        }
