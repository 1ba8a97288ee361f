"""
Catálogo de Potenciais e Pontos de Retorno
------------------------------------------
Este módulo avalia V(x) e dV/dx para cada família do catálogo e localiza os
pontos de retorno clássicos V(x) = E para uma energia arbitrária.

A localização segue dois passos:
1. Varredura de sinais de V(x) - E em `Config.SCAN_CELLS` células.
2. Refinamento por bisseção (`scipy.optimize.bisect`) até
   tol_x = 1e-12 * largura do domínio. Raízes tangentes (sem troca de sinal)
   são refinadas minimizando |V - E| e reportadas à parte.

Os potenciais por partes seguem a convenção fechada à esquerda: em um ponto
de quebra vale o pedaço da direita.
"""

import math
from functools import cached_property
from typing import List, Optional, Tuple

import numpy as np
from scipy import optimize
from scipy.interpolate import CubicSpline

from config import Config
from models.dynamics import RegionKind
from models.potential import PotentialFamily, PotentialSpec, RegionInterval, TurningPoints
from utils.error_handling import DomainError, NonDifferentiableError
from utils.extensions import logger

Family = PotentialFamily


def _sech2(u):
    """sech²(u) sem overflow para |u| grande."""
    e = np.exp(-2.0 * np.abs(u))
    return 4.0 * e / (1.0 + e) ** 2


class Potential:
    """
    Forma "compilada" de um `PotentialSpec`: avalia valor e derivada em
    escalares ou arrays numpy.
    """

    def __init__(self, spec: PotentialSpec):
        self.spec = spec
        self.family = spec.family
        self.scale = spec.scale
        self.fd_step: Optional[float] = None
        if self.family in (Family.PIECEWISE_LINEAR, Family.TABULATED):
            self._xs = np.asarray(spec.params["xs"], dtype=float)
            self._vs = np.asarray(spec.params["vs"], dtype=float)
        if self.family is Family.TABULATED:
            self._spline = CubicSpline(self._xs, self._vs)
            self.fd_step = 1e-6 * spec.width

    # --- Avaliação ---

    def value(self, x):
        """V(x) para escalar ou array."""
        x_arr = np.asarray(x, dtype=float)
        raw = self._raw_value(x_arr)
        out = self.scale * raw
        return float(out) if np.ndim(out) == 0 else out

    def slope(self, x):
        """dV/dx para escalar ou array."""
        x_arr = np.asarray(x, dtype=float)
        raw = self._raw_slope(x_arr)
        out = self.scale * raw
        return float(out) if np.ndim(out) == 0 else out

    def _edges(self) -> Tuple[float, float]:
        center, width = self.spec.param("center"), self.spec.param("width")
        return center - 0.5 * width, center + 0.5 * width

    def _raw_value(self, x: np.ndarray):
        spec, fam = self.spec, self.family
        if fam is Family.CONSTANT:
            return np.full_like(x, spec.param("V0"))
        if fam in (Family.SQUARE_BARRIER, Family.SQUARE_WELL):
            lo, hi = self._edges()
            inside = (x >= lo) & (x < hi)
            V0 = spec.param("V0")
            if fam is Family.SQUARE_BARRIER:
                return np.where(inside, V0, 0.0)
            return np.where(inside, 0.0, V0)
        if fam is Family.PARABOLIC_BARRIER:
            u = x - spec.param("center")
            return spec.param("V0") - 0.5 * spec.param("k") * u * u
        if fam is Family.HARMONIC_WELL:
            u = x - spec.param("center")
            return 0.5 * spec.param("k") * u * u
        if fam is Family.ECKART:
            return spec.param("V0") * _sech2((x - spec.param("center")) / spec.param("a"))
        if fam is Family.GAUSSIAN_BARRIER:
            u = (x - spec.param("center")) / spec.param("sigma")
            return spec.param("V0") * np.exp(-0.5 * u * u)
        if fam is Family.PIECEWISE_LINEAR:
            return np.interp(x, self._xs, self._vs)
        if fam is Family.TABULATED:
            self._check_tabulated(x)
            return self._spline(x)
        raise DomainError(f"Família desconhecida: {fam}")

    def _raw_slope(self, x: np.ndarray):
        spec, fam = self.spec, self.family
        if fam is Family.CONSTANT:
            return np.zeros_like(x)
        if fam in (Family.SQUARE_BARRIER, Family.SQUARE_WELL):
            lo, hi = self._edges()
            if np.any((x == lo) | (x == hi)):
                raise NonDifferentiableError(f"dV/dx não existe nas bordas {lo} e {hi} do degrau.")
            return np.zeros_like(x)
        if fam is Family.PARABOLIC_BARRIER:
            return -spec.param("k") * (x - spec.param("center"))
        if fam is Family.HARMONIC_WELL:
            return spec.param("k") * (x - spec.param("center"))
        if fam is Family.ECKART:
            a = spec.param("a")
            u = (x - spec.param("center")) / a
            return -2.0 * spec.param("V0") / a * _sech2(u) * np.tanh(u)
        if fam is Family.GAUSSIAN_BARRIER:
            sigma = spec.param("sigma")
            u = (x - spec.param("center")) / sigma
            return -spec.param("V0") * u / sigma * np.exp(-0.5 * u * u)
        if fam is Family.PIECEWISE_LINEAR:
            if np.any(np.isin(x, self._xs)):
                raise NonDifferentiableError("dV/dx não existe nos nós de um potencial linear por partes.")
            slopes = np.diff(self._vs) / np.diff(self._xs)
            idx = np.searchsorted(self._xs, x) - 1
            inside = (idx >= 0) & (idx < len(slopes))
            return np.where(inside, slopes[np.clip(idx, 0, len(slopes) - 1)], 0.0)
        if fam is Family.TABULATED:
            self._check_tabulated(x)
            h = self.fd_step
            lo, hi = self.spec.domain
            left = np.maximum(x - h, lo)
            right = np.minimum(x + h, hi)
            return (self._spline(right) - self._spline(left)) / (right - left)
        raise DomainError(f"Família desconhecida: {fam}")

    def _check_tabulated(self, x: np.ndarray) -> None:
        lo, hi = self.spec.domain
        if np.any((x < lo) | (x > hi)):
            raise DomainError(f"x fora do domínio tabulado [{lo}, {hi}].")

    @cached_property
    def breakpoints(self) -> List[float]:
        """Descontinuidades e quinas dentro do domínio, em ordem crescente."""
        lo, hi = self.spec.domain
        if self.family in (Family.SQUARE_BARRIER, Family.SQUARE_WELL):
            candidates = list(self._edges())
        elif self.family is Family.PIECEWISE_LINEAR:
            candidates = [float(x) for x in self._xs]
        else:
            candidates = []
        return sorted(x for x in candidates if lo < x < hi)


def build_potential(spec: PotentialSpec) -> Potential:
    """Compila a especificação para avaliação repetida."""
    return Potential(spec)


# ==================================
# ==== OPERAÇÕES PÚBLICAS ====
# ==================================

def evaluate(spec: PotentialSpec, x: float) -> float:
    """V(x). Fora do domínio só é erro para a família tabulada."""
    return build_potential(spec).value(x)


def derivative(spec: PotentialSpec, x: float) -> float:
    """
    dV/dx analítica (famílias analíticas) ou diferença centrada (tabulada,
    passo registrado em `Potential.fd_step`).
    """
    return build_potential(spec).slope(x)


def breakpoints(spec: PotentialSpec) -> List[float]:
    return build_potential(spec).breakpoints


def peak(spec: PotentialSpec, cells: Optional[int] = None) -> Tuple[float, float]:
    """Posição e valor do máximo de V no domínio."""
    pot = build_potential(spec)
    cells = cells or Config.SCAN_CELLS
    xs = np.linspace(spec.domain[0], spec.domain[1], cells + 1)
    vs = pot.value(xs)
    i = int(np.argmax(vs))
    if pot.breakpoints or i in (0, cells):
        return float(xs[i]), float(vs[i])
    result = optimize.minimize_scalar(
        lambda x: -pot.value(x),
        bounds=(xs[i - 1], xs[i + 1]),
        method="bounded",
        options={"xatol": Config.BISECTION_REL_TOL * spec.width},
    )
    if -result.fun >= vs[i]:
        return float(result.x), float(-result.fun)
    return float(xs[i]), float(vs[i])


def energy_tolerance(E: float, V: float = 0.0) -> float:
    """Tolerância absoluta para considerar E = V."""
    return Config.ENERGY_REL_TOL * max(1.0, abs(E), abs(V))


def infer_region(spec: PotentialSpec, E: float, x: float) -> RegionKind:
    """Tipo da região que contém x: H quando V(x) > E além da tolerância."""
    V = build_potential(spec).value(x)
    if V - E > energy_tolerance(E, V):
        return RegionKind.H_BARRIER
    return RegionKind.H_NORMAL


def find_turning_points(
    spec: PotentialSpec,
    E: float,
    cells: Optional[int] = None,
    tol_x: Optional[float] = None,
) -> TurningPoints:
    """
    Localiza todos os pontos de retorno V(x) = E no domínio e classifica os
    intervalos entre eles como região h (E >= V) ou H (E <= V).

    Trechos planos com V = E são reportados pelos seus extremos e
    classificados como região H de velocidade nula.

    Args:
        spec (PotentialSpec): O potencial.
        E (float): A energia total.
        cells (int, opcional): Células da varredura inicial.
        tol_x (float, opcional): Tolerância da bisseção.

    Returns:
        TurningPoints: Pontos, marcação de tangência e regiões.
    """
    if not math.isfinite(E):
        raise DomainError("A energia precisa ser finita.")
    pot = build_potential(spec)
    cells = cells or Config.SCAN_CELLS
    x_min, x_max = spec.domain
    tol_x = tol_x or Config.BISECTION_REL_TOL * spec.width

    xs = np.linspace(x_min, x_max, cells + 1)
    f = pot.value(xs) - E
    # Tolerância local: depende só de V(x) na amostra, não do resto do domínio.
    zero_tol = Config.ENERGY_REL_TOL * np.maximum(max(1.0, abs(E)), np.abs(f + E))
    signs = np.where(np.abs(f) <= zero_tol, 0, np.sign(f)).astype(int)

    def g(x: float) -> float:
        return pot.value(x) - E

    def is_zero(x: float) -> float:
        V = pot.value(x)
        return -1.0 if abs(V - E) <= energy_tolerance(E, V) else 1.0

    def bisect(fn, a: float, b: float) -> float:
        return float(optimize.bisect(fn, a, b, xtol=tol_x, maxiter=500))

    def dip(a: float, b: float, side: int) -> List[Tuple[float, bool]]:
        """
        Raízes entre a e b quando V - E tem o sinal `side` nas duas pontas.
        Um extremo que cruza E dá duas raízes simples; um que só toca E é
        uma raiz tangente; caso contrário não há raiz.
        """
        result = optimize.minimize_scalar(
            lambda x: side * g(x), bounds=(a, b), method="bounded", options={"xatol": tol_x}
        )
        x_t = float(result.x)
        value = g(x_t)
        tol = energy_tolerance(E, value + E)
        if side * value < -tol:
            return [(bisect(g, a, x_t), False), (bisect(g, x_t, b), False)]
        if abs(value) <= tol:
            return [(x_t, True)]
        return []

    found: List[Tuple[float, bool]] = []
    flats: List[Tuple[float, float]] = []
    n = len(xs)
    i = 0
    while i < n - 1:
        if signs[i] != 0 and signs[i + 1] != 0:
            if signs[i] != signs[i + 1]:
                found.append((bisect(g, xs[i], xs[i + 1]), False))
            i += 1
            continue

        start = i if signs[i] == 0 else i + 1
        end = start
        while end + 1 < n and signs[end + 1] == 0:
            end += 1
        left = signs[start - 1] if start > 0 else 0
        right = signs[end + 1] if end + 1 < n else 0

        if end > start:
            lo = bisect(is_zero, xs[start - 1], xs[start]) if left else float(xs[start])
            hi = bisect(lambda x: -is_zero(x), xs[end], xs[end + 1]) if right else float(xs[end])
            flats.append((lo, hi))
            # Extremos de um trecho plano só são pontos de retorno dentro do domínio.
            if left:
                found.append((lo, True))
            if right:
                found.append((hi, True))
        elif left and right and left != right:
            found.append((bisect(g, xs[start - 1], xs[end + 1]), False))
        elif left and right:
            found.extend(dip(xs[start - 1], xs[end + 1], left) or [(float(xs[start]), True)])
        else:
            found.append((float(xs[start]), False))
        i = end + 1

    # Raízes escondidas entre amostras: mínimos locais de |V - E| sem troca de sinal.
    magnitude = np.abs(f)
    for j in range(1, n - 1):
        if signs[j - 1] == signs[j] == signs[j + 1] != 0:
            if magnitude[j] < magnitude[j - 1] and magnitude[j] <= magnitude[j + 1]:
                found.extend(dip(xs[j - 1], xs[j + 1], int(signs[j])))

    found.sort()
    points: List[float] = []
    tangential: List[bool] = []
    for x, is_tangent in found:
        if points and abs(x - points[-1]) <= 10 * tol_x:
            tangential[-1] = tangential[-1] and is_tangent
            continue
        points.append(x)
        tangential.append(is_tangent)

    regions = _classify(pot, E, points, flats, tol_x)
    logger.debug("find_turning_points(%s, E=%g): %d pontos", spec.family.value, E, len(points))
    return TurningPoints(E=E, points=points, tangential=tangential, regions=regions, tol_x=tol_x)


def _classify(
    pot: Potential,
    E: float,
    points: List[float],
    flats: List[Tuple[float, float]],
    tol_x: float,
) -> List[RegionInterval]:
    """Classifica cada intervalo entre fronteiras consecutivas pelo sinal de V - E."""
    x_min, x_max = pot.spec.domain
    bounds = [x_min] + points + [x_max]
    is_point = [False] + [True] * len(points) + [False]
    regions: List[RegionInterval] = []
    for k in range(len(bounds) - 1):
        lo, hi = bounds[k], bounds[k + 1]
        if hi - lo <= tol_x:
            continue
        flat = any(abs(lo - f_lo) <= 10 * tol_x and abs(hi - f_hi) <= 10 * tol_x for f_lo, f_hi in flats)
        V_mid = pot.value(0.5 * (lo + hi))
        excess = V_mid - E
        if flat or abs(excess) <= energy_tolerance(E, V_mid):
            kind, flat = RegionKind.H_BARRIER, True
        else:
            kind = RegionKind.H_NORMAL if excess < 0 else RegionKind.H_BARRIER
        regions.append(RegionInterval(
            lo=float(lo), hi=float(hi), kind=kind,
            bounded_left=is_point[k], bounded_right=is_point[k + 1], flat=flat,
        ))
    return regions


__all__ = [
    "Potential", "build_potential", "evaluate", "derivative", "breakpoints",
    "peak", "find_turning_points", "energy_tolerance", "infer_region",
]
