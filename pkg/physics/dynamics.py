"""
Dinâmica Clássica em Tempo Real
-------------------------------
Este módulo implementa as duas leis de movimento:

- região h (E >= V): h = ½m₀v² + V,  m₀ẍ = -dV/dx
- região H (E <= V): H = -½m₀v² + V, m₀ẍ = +dV/dx

A integração usa velocity-Verlet com passo fixo e tempo sempre real. Na
região H a partícula oscila entre os pontos de retorno b e c exatamente como
na região h oscila entre a e b; o meio-período de cada região é calculado
por quadratura com a troca sin² (ver `physics.quadrature`).
"""

import math
from typing import List, Optional

import numpy as np
from scipy import optimize

from config import Config
from models.dynamics import HalfPeriod, ParticleState, RegionKind, RoundtripReport, Trajectory
from models.potential import PotentialSpec
from physics.potential import Potential, build_potential, energy_tolerance, find_turning_points
from physics.quadrature import sin2_integral
from utils.error_handling import (
    DivergentPeriodError,
    DomainError,
    NonDifferentiableError,
    NumericalFailureError,
    RegionMismatchError,
    StepSizeError,
)
from utils.extensions import logger

HALF_PERIOD_METHOD = "gauss-legendre-sin2"


def energy_function(region: RegionKind, V: float, v: float, m0: float) -> float:
    """h = ½m₀v² + V (região h) ou H = -½m₀v² + V (região H)."""
    region = RegionKind.parse(region)
    return region.kinetic_sign * 0.5 * m0 * v * v + V


def conservation_tolerance(E: float, dt: float) -> float:
    """tol_cons = c·dt²·max(1, |E|)."""
    return Config.CONSERVATION_CONSTANT * dt * dt * max(1.0, abs(E))


def speed_from_energy(region: RegionKind, spec: PotentialSpec, E: float, x: float, m0: Optional[float] = None) -> float:
    """
    Velocidade escalar não negativa √(2·(±(E - V))/m₀) na região indicada.

    Raises:
        RegionMismatchError: se E < V em uma região h (ou E > V em uma região H).
    """
    region = RegionKind.parse(region)
    m0 = m0 or Config.M0
    V = build_potential(spec).value(x)
    excess = region.excess(E, V)
    if excess < -energy_tolerance(E, V):
        raise RegionMismatchError(
            f"x = {x} não pertence a uma região '{region.value}' para E = {E} (V = {V}).",
            details={"x": x, "E": E, "V": V},
        )
    return math.sqrt(2.0 * max(excess, 0.0) / m0)


def _acceleration(pot: Potential, region: RegionKind, x: float, m0: float) -> float:
    try:
        slope = pot.slope(x)
    except NonDifferentiableError:
        # Em uma quina usa a média das derivadas laterais; em um degrau vale 0.
        slope = 0.5 * (pot.slope(np.nextafter(x, -np.inf)) + pot.slope(np.nextafter(x, np.inf)))
    return region.force_sign * slope / m0


def integrate_trajectory(
    region: RegionKind,
    spec: PotentialSpec,
    state0: ParticleState,
    t_end: float,
    dt: float,
    halt_at_turning: bool = True,
    max_hits: Optional[int] = None,
) -> Trajectory:
    """
    Integra a lei de força da região com velocity-Verlet em tempo real.

    Com `halt_at_turning=True` a integração para no primeiro ponto de
    retorno, mantendo a amostra em que a velocidade inverte. Com
    `halt_at_turning=False` ela atravessa os pontos de retorno (potenciais
    suaves refletem sozinhos, paredes descontínuas refletem elasticamente)
    e registra cada passagem em `turning_hits`.

    Args:
        region (RegionKind): h ou H.
        spec (PotentialSpec): O potencial.
        state0 (ParticleState): Estado inicial, consistente com a energia da região.
        t_end (float): Tempo final.
        dt (float): Passo de tempo fixo (> 0).
        halt_at_turning (bool): Parar no primeiro ponto de retorno.
        max_hits (int, opcional): Parar depois desse número de pontos de retorno.

    Returns:
        Trajectory: Amostras, desvio máximo de energia e pontos de retorno.
    """
    region = RegionKind.parse(region)
    if not dt > 0:
        raise DomainError("O passo de tempo dt precisa ser positivo.")

    pot = build_potential(spec)
    m0, E = state0.m0, state0.E
    tol_cons = conservation_tolerance(E, dt)
    drift_limit = Config.DRIFT_FACTOR * tol_cons

    def excess_at(x: float) -> float:
        return region.excess(E, pot.value(x))

    def region_tol(x: float) -> float:
        return energy_tolerance(E, pot.value(x)) + tol_cons

    def defect_at(x: float, v: float) -> float:
        return energy_function(region, pot.value(x), v, m0) - E

    x, v, t0 = float(state0.x), float(state0.v), float(state0.t)
    if excess_at(x) < -region_tol(x):
        raise RegionMismatchError(
            f"O estado inicial x = {x} não pertence à região '{region.value}'.",
            details={"x": x, "E": E},
        )
    defect0 = defect_at(x, v)
    if abs(defect0) > tol_cons + energy_tolerance(E, pot.value(x)):
        raise RegionMismatchError(
            f"O estado inicial não tem energia {E} na região '{region.value}' (defeito {defect0:.3e}).",
            details={"defect": defect0},
        )

    samples: List[ParticleState] = [ParticleState(t0, x, v, m0, E)]
    defects: List[float] = [defect0]
    hits = []
    status, turning_time, turning_x = "completed", None, None

    a = _acceleration(pot, region, x, m0)
    n_steps = max(0, int(math.ceil((t_end - t0) / dt - 1e-9)))
    for k in range(1, n_steps + 1):
        t_prev = t0 + (k - 1) * dt
        t_new = t0 + k * dt
        x_new = x + v * dt + 0.5 * a * dt * dt

        if excess_at(x_new) < -region_tol(x_new):
            # Parede descontínua: localiza o instante de contato no caminho quadrático.
            x_n, v_n, a_n = x, v, a

            def inside(tau: float) -> float:
                xp = x_n + v_n * tau + 0.5 * a_n * tau * tau
                return 1.0 if excess_at(xp) >= -region_tol(xp) else -1.0

            tau = float(optimize.bisect(inside, 0.0, dt, xtol=1e-14 * dt, maxiter=200))
            x_wall = x_n + v_n * tau + 0.5 * a_n * tau * tau
            hits.append((t_prev + tau, x_wall))
            if halt_at_turning:
                status, turning_time, turning_x = "turning_point", t_prev + tau, x_wall
                break
            v_new = -(v_n + a_n * dt)
            x_new = 2.0 * x_wall - x_new
            a_new = _acceleration(pot, region, x_new, m0)
        else:
            a_new = _acceleration(pot, region, x_new, m0)
            v_new = v + 0.5 * (a + a_new) * dt
            if v * v_new < 0 or (v_new == 0.0 and v != 0.0):
                tau = dt * v / (v - v_new)
                hits.append((t_prev + tau, x + v * tau + 0.5 * a * tau * tau))
                if halt_at_turning:
                    status, turning_time, turning_x = "turning_point", hits[-1][0], hits[-1][1]
            elif halt_at_turning:
                speed = math.sqrt(2.0 * max(excess_at(x_new), 0.0) / m0)
                if speed < Config.V_STOP and a_new * v_new < 0:
                    status, turning_time, turning_x = "turning_point", t_new, x_new

        defect = defect_at(x_new, v_new)
        if abs(defect) > drift_limit:
            raise StepSizeError(
                f"Desvio de energia {abs(defect):.3e} acima de {drift_limit:.3e} com dt = {dt}.",
                details={"dt": dt, "drift": abs(defect), "t": t_new},
            )
        x, v, a = x_new, v_new, a_new
        samples.append(ParticleState(t_new, x, v, m0, E))
        defects.append(defect)

        if status == "turning_point":
            break
        if max_hits is not None and len(hits) >= max_hits:
            status, turning_time, turning_x = "turning_point", hits[-1][0], hits[-1][1]
            break

    drift = max(abs(d) for d in defects)
    logger.debug(
        "integrate_trajectory(%s): %d amostras, drift=%.3e, status=%s",
        region.value, len(samples), drift, status,
    )
    return Trajectory(
        samples=samples,
        region=region,
        energy_drift=drift,
        defects=defects,
        status=status,
        turning_time=turning_time,
        turning_x=turning_x,
        turning_hits=hits,
    )


def _is_wall(pot: Potential, x: float, width: float) -> bool:
    """x coincide com um degrau ou quina do potencial (força impulsiva)."""
    return any(abs(x - bp) <= 1e-9 * width for bp in pot.breakpoints)


def half_period(
    region: RegionKind,
    spec: PotentialSpec,
    E: float,
    m0: Optional[float],
    a: float,
    b: float,
    order: Optional[int] = None,
) -> HalfPeriod:
    """
    Meio-período T = m₀∫_a^b dx / √(2m₀·(±(E - V))) entre pontos de retorno
    consecutivos, com a troca x = a + (b - a)·sin²θ e Gauss-Legendre.

    Raises:
        RegionMismatchError: se o integrando troca de sinal dentro de (a, b).
        DivergentPeriodError: se um extremo é tangente (V' = 0), período infinito.
    """
    region = RegionKind.parse(region)
    m0 = m0 or Config.M0
    if not a < b:
        raise DomainError("O meio-período exige extremos a < b.")
    pot = build_potential(spec)
    width = b - a

    for endpoint in (a, b):
        if _is_wall(pot, endpoint, spec.width):
            continue
        try:
            slope = pot.slope(endpoint)
        except NonDifferentiableError:
            continue
        if abs(slope) * width <= energy_tolerance(E, pot.value(endpoint)):
            raise DivergentPeriodError(
                f"Ponto de retorno tangente em x = {endpoint}: o período é infinito.",
                details={"x": endpoint, "slope": slope},
            )

    def integrand(xs: np.ndarray) -> np.ndarray:
        vs = pot.value(xs)
        excess = region.kinetic_sign * (E - vs)
        tol = Config.ENERGY_REL_TOL * np.maximum(max(1.0, abs(E)), np.abs(vs))
        bad = excess < -tol
        if np.any(bad):
            x_bad = float(xs[np.argmax(bad)])
            raise RegionMismatchError(
                f"O integrando troca de sinal em x = {x_bad}: (a, b) não é uma região '{region.value}'.",
                details={"x": x_bad},
            )
        excess = np.maximum(excess, np.finfo(float).tiny)
        return m0 / np.sqrt(2.0 * m0 * excess)

    value, error = sin2_integral(integrand, a, b, order)
    if not (math.isfinite(value) and value > 0):
        raise NumericalFailureError(f"Meio-período inválido: {value}.")
    return HalfPeriod(value=value, quadrature_error=error, method=HALF_PERIOD_METHOD, region=region, a=a, b=b)


def full_period(region: RegionKind, spec: PotentialSpec, E: float, m0: Optional[float], a: float, b: float) -> float:
    """Período completo de ida e volta, 2·T."""
    return 2.0 * half_period(region, spec, E, m0, a, b).value


def region_survey(spec: PotentialSpec, E: float, m0: Optional[float] = None) -> List[HalfPeriod]:
    """
    Meio-período de cada região limitada por dois pontos de retorno, da
    esquerda para a direita. Regiões com extremo tangente recebem período
    infinito.
    """
    m0 = m0 or Config.M0
    survey = []
    for interval in find_turning_points(spec, E).bounded_regions():
        try:
            survey.append(half_period(interval.kind, spec, E, m0, interval.lo, interval.hi))
        except DivergentPeriodError:
            survey.append(HalfPeriod(
                value=math.inf, quadrature_error=math.nan, method="divergent",
                region=interval.kind, a=interval.lo, b=interval.hi,
            ))
    return survey


def roundtrip_consistency(
    region: RegionKind,
    spec: PotentialSpec,
    E: float,
    m0: Optional[float] = None,
    dt: float = 1e-4,
) -> RoundtripReport:
    """
    Compara o tempo de travessia obtido pela EDO com o meio-período da
    quadratura na primeira região limitada do tipo pedido.

    A partícula parte do meio da região e o tempo de travessia é medido
    entre dois pontos de retorno consecutivos.
    """
    region = RegionKind.parse(region)
    m0 = m0 or Config.M0
    tps = find_turning_points(spec, E)
    candidates = [
        interval for interval in tps.bounded_regions(region)
        if not any(t for x, t in zip(tps.points, tps.tangential) if x in (interval.lo, interval.hi))
    ]
    if not candidates:
        raise RegionMismatchError(
            f"Nenhuma região '{region.value}' limitada por pontos de retorno simples para E = {E}."
        )
    interval = candidates[0]
    period = half_period(region, spec, E, m0, interval.lo, interval.hi)

    x0 = 0.5 * (interval.lo + interval.hi)
    v0 = speed_from_energy(region, spec, E, x0, m0)
    state0 = ParticleState(t=0.0, x=x0, v=v0, m0=m0, E=E)
    trajectory = integrate_trajectory(
        region, spec, state0,
        t_end=3.0 * period.value + 10.0 * dt,
        dt=dt,
        halt_at_turning=False,
        max_hits=2,
    )
    if len(trajectory.turning_hits) < 2:
        raise NumericalFailureError("A trajetória não alcançou os dois pontos de retorno.")
    (t_first, _), (t_second, _) = trajectory.turning_hits[:2]
    return RoundtripReport(
        region=region,
        a=interval.lo,
        b=interval.hi,
        ode_time=t_second - t_first,
        quadrature_time=period.value,
        dt=dt,
    )


__all__ = [
    "energy_function", "conservation_tolerance", "speed_from_energy",
    "integrate_trajectory", "half_period", "full_period", "region_survey",
    "roundtrip_consistency", "HALF_PERIOD_METHOD",
]
