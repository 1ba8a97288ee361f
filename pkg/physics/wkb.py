"""
Aproximação WKB nas Duas Regiões
--------------------------------
Região h: ψ ∝ p^{-1/2}·exp(+i/ħ ∫p dx), oscilatória.
Região H: ψ ∝ p̃^{-1/2}·exp(∓1/ħ ∫p̃ dx), sem caráter oscilatório.

Os perfis são relativos a um ponto de referência x_ref dentro da região e
não carregam o fator temporal exp(-iEt/ħ). A transmissão usa a forma
exponencial primitiva T = exp(-2S/ħ), sem fórmulas de conexão.
"""

import math
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from config import Config
from models.dynamics import RegionKind
from models.potential import PotentialSpec, TurningPoints
from models.scattering import ScatteringMethod, ScatteringResult
from models.wkb import ActionResult, Branch, LogTransmissionFit, WkbProfile
from physics.exact import exact_transmission
from physics.potential import Potential, build_potential, energy_tolerance, find_turning_points
from physics.quadrature import gl_cumulative, sin2_integral
from utils.error_handling import (
    NoBarrierError,
    NonDifferentiableError,
    RegionMismatchError,
    TurningPointDivergenceError,
)
from utils.extensions import logger


def _momentum(pot: Potential, region: RegionKind, E: float, m0: float):
    """p(x) = √(2m₀·(±(E - V))), zerado onde o excesso é negativo por arredondamento."""
    def p(xs):
        return np.sqrt(2.0 * m0 * np.maximum(region.kinetic_sign * (E - pot.value(xs)), 0.0))
    return p


def _safe_slope(pot: Potential, xs: np.ndarray) -> np.ndarray:
    try:
        return np.asarray(pot.slope(xs), dtype=float)
    except NonDifferentiableError:
        below = np.asarray(pot.slope(np.nextafter(xs, -np.inf)), dtype=float)
        above = np.asarray(pot.slope(np.nextafter(xs, np.inf)), dtype=float)
        return 0.5 * (below + above)


def wkb_profile(
    region: RegionKind,
    spec: PotentialSpec,
    E: float,
    m0: Optional[float],
    hbar: Optional[float],
    x_ref: float,
    xs: Sequence[float],
    branch: Union[str, Branch] = Branch.DECAYING,
) -> WkbProfile:
    """
    Amostra a função de onda WKB relativa a x_ref.

    Args:
        region (RegionKind): Região de todas as amostras e de x_ref.
        spec (PotentialSpec): O potencial.
        E (float): Energia.
        m0 (float): Massa (None usa `Config.M0`).
        hbar (float): ħ (None usa `Config.HBAR`).
        x_ref (float): Ponto de referência, onde a amplitude vale 1.
        xs (Sequence[float]): Amostras.
        branch: "decaying" ou "growing" (ignorado na região h).

    Raises:
        RegionMismatchError: amostra fora da região do tipo indicado.
        TurningPointDivergenceError: amostra a menos de dist_min de um ponto de retorno.
    """
    region = RegionKind.parse(region)
    branch = Branch(branch)
    m0 = m0 or Config.M0
    hbar = hbar or Config.HBAR
    pot = build_potential(spec)
    xs = np.atleast_1d(np.asarray(xs, dtype=float))

    tps = find_turning_points(spec, E)
    interval = _interval_of(tps, x_ref, region)
    dist_min = Config.WKB_EXCLUSION_FRACTION * interval.width
    for x in np.append(xs, x_ref):
        if not interval.lo <= x <= interval.hi:
            raise RegionMismatchError(
                f"x = {x} está fora da região '{region.value}' [{interval.lo}, {interval.hi}] de x_ref.",
                details={"x": float(x)},
            )
        near_left = interval.bounded_left and x - interval.lo < dist_min
        near_right = interval.bounded_right and interval.hi - x < dist_min
        if near_left or near_right:
            raise TurningPointDivergenceError(
                f"x = {x} está a menos de {dist_min:.3e} de um ponto de retorno.",
                details={"x": float(x), "dist_min": dist_min},
            )

    p = _momentum(pot, region, E, m0)
    p_ref = float(p(np.array([x_ref]))[0])
    p_xs = p(xs)
    integral = gl_cumulative(p, x_ref, xs)
    ratio = np.sqrt(p_ref / p_xs)

    if region is RegionKind.H_NORMAL:
        amplitude = ratio
        phase = integral / hbar
    else:
        amplitude = ratio * np.exp(branch.sign * integral / hbar)
        phase = np.zeros_like(xs)

    # Critério de variação lenta |ħ·p'/p²| = |ħ·m₀·V'/p³|.
    validity = float(np.max(np.abs(hbar * m0 * _safe_slope(pot, xs) / p_xs ** 3)))
    if validity > 1.0:
        logger.warning("wkb_profile: critério de validade %.3g > 1; WKB pouco confiável.", validity)

    return WkbProfile(
        xs=xs, amplitude=amplitude, phase=phase, region=region,
        x_ref=float(x_ref), hbar=hbar, branch=branch, validity=validity,
    )


def _interval_of(tps: TurningPoints, x_ref: float, region: RegionKind):
    """Intervalo de x_ref; exige que seja do tipo indicado."""
    matches = [interval for interval in tps.regions if interval.lo < x_ref < interval.hi]
    if not matches:
        matches = [interval for interval in tps.regions if interval.contains(x_ref)]
    for interval in matches:
        if interval.kind is region and not interval.flat:
            return interval
    raise RegionMismatchError(
        f"x_ref = {x_ref} não está em uma região '{region.value}' para E = {tps.E}.",
        details={"x_ref": x_ref},
    )


def barrier_action(spec: PotentialSpec, E: float, m0: Optional[float] = None) -> ActionResult:
    """
    S = ∫_b^c √(2m₀(V - E)) dx sobre a primeira região H limitada por dois
    pontos de retorno, com a mesma quadratura sin² dos meio-períodos.

    Pontos de retorno coincidentes (E no pico) ou um topo plano com V = E
    dão S = 0 e `degenerate=True`.

    Raises:
        NoBarrierError: quando não existe região proibida limitada.
    """
    m0 = m0 or Config.M0
    tps = find_turning_points(spec, E)
    pot = build_potential(spec)
    tangential = dict(zip(tps.points, tps.tangential))

    barriers = tps.bounded_regions(RegionKind.H_BARRIER)
    if barriers:
        interval = barriers[0]
        p = _momentum(pot, RegionKind.H_BARRIER, E, m0)
        S, error = sin2_integral(p, interval.lo, interval.hi)
        degenerate = tangential.get(interval.lo, False) or tangential.get(interval.hi, False)
        return ActionResult(S=S, b=interval.lo, c=interval.hi, quadrature_error=error, degenerate=degenerate)

    flats = [interval for interval in tps.regions if interval.flat and interval.bounded]
    if flats:
        return ActionResult(S=0.0, b=flats[0].lo, c=flats[0].hi, quadrature_error=0.0, degenerate=True)

    for x, is_tangent in zip(tps.points, tps.tangential):
        if is_tangent and pot.value(x - tps.tol_x * 10) <= E + energy_tolerance(E):
            return ActionResult(S=0.0, b=x, c=x, quadrature_error=0.0, degenerate=True)

    raise NoBarrierError(
        f"E = {E} não tem região proibida limitada (pico abaixo da energia ou barreira aberta).",
        details={"E": E},
    )


def wkb_transmission(spec: PotentialSpec, E: float, m0: Optional[float] = None, hbar: Optional[float] = None) -> ScatteringResult:
    """T = exp(-2S/ħ), R = 1 - T."""
    m0 = m0 or Config.M0
    hbar = hbar or Config.HBAR
    action = barrier_action(spec, E, m0)
    log_T = -2.0 * action.S / hbar
    T = math.exp(log_T)
    return ScatteringResult(
        E=E, T=T, R=1.0 - T, method=ScatteringMethod.WKB_PRIMITIVE,
        log_T=log_T, S=action.S, hbar=hbar,
    )


def log_transmission_fit(
    spec: PotentialSpec,
    E: float,
    m0: Optional[float],
    hbars: Iterable[float],
    method: Union[str, ScatteringMethod] = ScatteringMethod.WKB_PRIMITIVE,
    grid_n: Optional[int] = None,
) -> LogTransmissionFit:
    """
    Ajuste por mínimos quadrados de ln T contra 1/ħ. Para a fórmula
    primitiva a inclinação é exatamente -2S.
    """
    method = ScatteringMethod(method)
    hbars = [float(h) for h in hbars]
    logs = []
    for hbar in hbars:
        if method is ScatteringMethod.WKB_PRIMITIVE:
            result = wkb_transmission(spec, E, m0, hbar)
        else:
            result = exact_transmission(spec, E, m0, hbar, grid_n, method=method)
        logs.append(result.ln_T)
    slope, intercept = np.polyfit(1.0 / np.asarray(hbars), np.asarray(logs), 1)
    return LogTransmissionFit(slope=float(slope), intercept=float(intercept), hbars=hbars, log_T=logs)


__all__ = [
    "wkb_profile", "barrier_action", "wkb_transmission", "log_transmission_fit",
]
