"""
Solver Estacionário Exato
-------------------------
Resolve ψ'' = (2m₀/ħ²)(V - E)ψ, a mesma equação nas regiões h e H, e serve
de oráculo para a aproximação WKB.

Dois métodos independentes:
1. Matriz de transferência sobre uma aproximação constante por segmentos.
   As fronteiras dos segmentos incluem os pontos de quebra do potencial,
   então degraus retangulares são representados exatamente.
2. Numerov, integrando da direita (onda puramente transmitida) para a
   esquerda e decompondo a solução em onda incidente e refletida.

As soluções crescentes sob barreiras grossas são renormalizadas segmento a
segmento; o logaritmo dos fatores removidos é acumulado à parte.
"""

import cmath
import math
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from config import Config
from models.potential import PotentialSpec
from models.scattering import ScatteringMethod, ScatteringResult, WaveProfile
from physics.potential import Potential, build_potential
from utils.error_handling import (
    DomainError,
    DomainPaddingError,
    DynamicRangeError,
    NoPropagatingChannelError,
    NumericalFailureError,
)
from utils.extensions import logger

MIN_GRID_N = 64
FLAT_ZONE_SAMPLES = 64


# ==================================
# ==== CONTORNOS ASSINTÓTICOS ====
# ==================================

def asymptotic_levels(spec: PotentialSpec, pot: Optional[Potential] = None) -> Tuple[float, float]:
    """
    Níveis V_L e V_R nas extremidades do domínio.

    Raises:
        DomainPaddingError: se V varia mais que FLATNESS_TOL·max|V| nos 5%
            externos do domínio.
    """
    pot = pot or build_potential(spec)
    x_min, x_max = spec.domain
    zone = Config.FLAT_ZONE_FRACTION * spec.width
    v_max = float(np.max(np.abs(pot.value(np.linspace(x_min, x_max, Config.SCAN_CELLS + 1)))))
    tol = Config.FLATNESS_TOL * v_max

    levels = []
    for edge, inner in ((x_min, x_min + zone), (x_max, x_max - zone)):
        v_edge = pot.value(edge)
        samples = pot.value(np.linspace(edge, inner, FLAT_ZONE_SAMPLES))
        deviation = float(np.max(np.abs(samples - v_edge)))
        if deviation > tol:
            raise DomainPaddingError(
                f"V varia {deviation:.3e} perto de x = {edge} (tolerância {tol:.3e}); alargue o domínio.",
                details={"edge": edge, "deviation": deviation},
            )
        levels.append(float(v_edge))
    return levels[0], levels[1]


def _lead_wavenumbers(spec: PotentialSpec, pot: Potential, E: float, m0: float, hbar: float) -> Tuple[float, float, float, float]:
    V_L, V_R = asymptotic_levels(spec, pot)
    if E <= V_L or E <= V_R:
        raise NoPropagatingChannelError(
            f"E = {E} não está acima dos níveis assintóticos V_L = {V_L}, V_R = {V_R}.",
            details={"E": E, "V_L": V_L, "V_R": V_R},
        )
    k_L = math.sqrt(2.0 * m0 * (E - V_L)) / hbar
    k_R = math.sqrt(2.0 * m0 * (E - V_R)) / hbar
    return V_L, V_R, k_L, k_R


# ==================================
# ==== MATRIZ DE TRANSFERÊNCIA ====
# ==================================

def segment_edges(spec: PotentialSpec, grid_n: int, pot: Optional[Potential] = None) -> np.ndarray:
    """Grade uniforme de grid_n segmentos unida aos pontos de quebra do potencial."""
    pot = pot or build_potential(spec)
    edges = np.linspace(spec.domain[0], spec.domain[1], grid_n + 1)
    if pot.breakpoints:
        edges = np.union1d(edges, np.asarray(pot.breakpoints))
    return edges


def _segments(spec: PotentialSpec, pot: Potential, grid_n: int, E: float, m0: float, hbar: float):
    """(comprimento, g) por segmento, fundindo vizinhos com o mesmo g."""
    edges = segment_edges(spec, grid_n, pot)
    mids = 0.5 * (edges[:-1] + edges[1:])
    gs = 2.0 * m0 * (pot.value(mids) - E) / (hbar * hbar)
    lengths = np.diff(edges)

    merged = []
    for d, g in zip(lengths.tolist(), gs.tolist()):
        if merged and merged[-1][1] == g:
            merged[-1][0] += d
        else:
            merged.append([d, g])
    return merged


def _segment_matrix(d: float, g: float) -> Tuple[float, float, float, float, float]:
    """
    Matriz 2x2 que leva (ψ, ψ') de uma ponta do segmento à outra, mais o log
    do fator exp(κd) retirado dos ramos hiperbólicos.
    """
    if g < 0:
        k = math.sqrt(-g)
        c, s = math.cos(k * d), math.sin(k * d)
        return c, s / k, -k * s, c, 0.0
    if g > 0:
        kappa = math.sqrt(g)
        damp = math.exp(-2.0 * kappa * d)
        c, s = 0.5 * (1.0 + damp), 0.5 * (1.0 - damp)
        return c, s / kappa, kappa * s, c, kappa * d
    # E exatamente no nível do segmento: solução linear.
    return 1.0, d, 0.0, 1.0, 0.0


def transfer_product(segments) -> Tuple[float, float, float, float, float]:
    """
    Produto M = M_N ··· M_1 em floats Python, renormalizado a cada passo
    pelo maior elemento. Retorna (m11, m12, m21, m22, log_escala).
    """
    m11, m12, m21, m22 = 1.0, 0.0, 0.0, 1.0
    log_scale = 0.0
    for d, g in segments:
        a11, a12, a21, a22, log_factor = _segment_matrix(d, g)
        m11, m12, m21, m22 = (
            a11 * m11 + a12 * m21,
            a11 * m12 + a12 * m22,
            a21 * m11 + a22 * m21,
            a21 * m12 + a22 * m22,
        )
        norm = max(abs(m11), abs(m12), abs(m21), abs(m22))
        m11, m12, m21, m22 = m11 / norm, m12 / norm, m21 / norm, m22 / norm
        log_scale += log_factor + math.log(norm)
    return m11, m12, m21, m22, log_scale


def _transfer_matrix_solve(spec: PotentialSpec, pot: Potential, E: float, m0: float, hbar: float, grid_n: int, k_L: float, k_R: float):
    m11, m12, m21, m22, log_scale = transfer_product(_segments(spec, pot, grid_n, E, m0, hbar))
    den = complex(k_R * k_L * m12 - m21, k_R * m11 + k_L * m22)
    num_r = complex(-m21 - k_R * k_L * m12, k_R * m11 - k_L * m22)
    den2 = abs(den) ** 2
    log_T = math.log(4.0 * k_L * k_R) - 2.0 * log_scale - math.log(den2)
    R = abs(num_r) ** 2 / den2
    return math.exp(log_T), R, log_T


# ==================================
# ==== NUMEROV ====
# ==================================

def _numerov_theta(h: float, g: float) -> float:
    """Número de onda discreto θ da recorrência de Numerov com g constante (< 0)."""
    cos_theta = (1.0 + 5.0 * h * h * g / 12.0) / (1.0 - h * h * g / 12.0)
    if not -1.0 < cos_theta < 1.0:
        raise NumericalFailureError("Grade grossa demais: a onda da extremidade não é resolvida.")
    return math.acos(cos_theta)


def _numerov_backward(gs: np.ndarray, h: float) -> Tuple[np.ndarray, float, float]:
    """
    Integra de trás para frente a partir da onda transmitida
    ψ_N = 1, ψ_{N-1} = e^{-iθ_R}.

    Returns:
        (ψ renormalizado, log da escala acumulada, θ_R)
    """
    n = len(gs)
    w = 1.0 - h * h * gs / 12.0
    c = 2.0 * (1.0 + 5.0 * h * h * gs / 12.0)
    theta_R = _numerov_theta(h, float(gs[-1]))

    psi = np.zeros(n, dtype=complex)
    psi[-1] = 1.0
    psi[-2] = cmath.exp(-1j * theta_R)
    log_scale = 0.0
    w_l, c_l = w.tolist(), c.tolist()
    for j in range(n - 2, 0, -1):
        value = (c_l[j] * psi[j] - w_l[j + 1] * psi[j + 1]) / w_l[j - 1]
        if not cmath.isfinite(value):
            raise DynamicRangeError(
                f"ψ deixou a faixa de ponto flutuante em j = {j} mesmo com renormalização.",
                details={"index": j},
            )
        psi[j - 1] = value
        magnitude = abs(value)
        if magnitude > Config.NUMEROV_RESCALE:
            psi[j - 1:] /= magnitude
            log_scale += math.log(magnitude)
    return psi, log_scale, theta_R


def _uniform_grid(spec: PotentialSpec, grid: Union[int, Sequence[float], None]) -> np.ndarray:
    if grid is None:
        grid = Config.NUMEROV_N
    if isinstance(grid, (int, np.integer)):
        xs = np.linspace(spec.domain[0], spec.domain[1], int(grid) + 1)
    else:
        xs = np.asarray(grid, dtype=float)
    steps = np.diff(xs)
    if len(xs) < MIN_GRID_N or np.any(steps <= 0) or np.ptp(steps) > 1e-9 * steps.mean():
        raise DomainError(f"A grade de Numerov precisa ser uniforme, crescente e ter pelo menos {MIN_GRID_N} pontos.")
    return xs


def _incident_split(psi: np.ndarray, theta_L: float) -> Tuple[complex, complex]:
    """Amplitudes (incidente, refletida) a partir de ψ_0 e ψ_1 na extremidade esquerda."""
    e_plus, e_minus = cmath.exp(1j * theta_L), cmath.exp(-1j * theta_L)
    A = (psi[1] - psi[0] * e_minus) / (e_plus - e_minus)
    B = psi[0] - A
    return A, B


def _numerov_solve(spec: PotentialSpec, pot: Potential, E: float, m0: float, hbar: float, grid_n: int):
    xs = _uniform_grid(spec, grid_n)
    h = float(xs[1] - xs[0])
    gs = 2.0 * m0 * (pot.value(xs) - E) / (hbar * hbar)
    psi, log_scale, theta_R = _numerov_backward(gs, h)
    theta_L = _numerov_theta(h, float(gs[0]))
    A, B = _incident_split(psi, theta_L)
    # Fluxo discreto conservado: |amplitude|²·w²·sin θ em cada extremidade.
    w_L, w_R = 1.0 - h * h * gs[0] / 12.0, 1.0 - h * h * gs[-1] / 12.0
    # A onda transmitida foi dividida por exp(log_scale) nas renormalizações.
    log_T = (
        math.log(w_R * w_R * math.sin(theta_R)) - 2.0 * log_scale
        - math.log(abs(A) ** 2 * w_L * w_L * math.sin(theta_L))
    )
    R = abs(B) ** 2 / abs(A) ** 2
    return math.exp(log_T), R, log_T


# ==================================
# ==== OPERAÇÕES PÚBLICAS ====
# ==================================

def exact_transmission(
    spec: PotentialSpec,
    E: float,
    m0: Optional[float] = None,
    hbar: Optional[float] = None,
    grid_n: Optional[int] = None,
    method: Union[str, ScatteringMethod] = ScatteringMethod.TRANSFER_MATRIX,
) -> ScatteringResult:
    """
    Transmissão e reflexão exatas para uma onda incidente pela esquerda.

    Args:
        spec (PotentialSpec): Potencial assintoticamente plano nas duas pontas.
        E (float): Energia, acima dos dois níveis assintóticos.
        m0 (float, opcional): Massa (padrão `Config.M0`).
        hbar (float, opcional): ħ (padrão `Config.HBAR`).
        grid_n (int, opcional): Número de segmentos, >= 64 (padrão `Config.GRID_N`).
        method: "transfer_matrix" (padrão) ou "numerov".

    Returns:
        ScatteringResult: T, R, ln T e o defeito de Richardson |T(n) - T(2n)|.

    Raises:
        NoPropagatingChannelError: E abaixo de um nível assintótico.
        NumericalFailureError: |T + R - 1| acima de `Config.UNITARITY_TOL`.
    """
    m0 = m0 or Config.M0
    hbar = hbar or Config.HBAR
    grid_n = grid_n or Config.GRID_N
    method = ScatteringMethod(method)
    if method is ScatteringMethod.WKB_PRIMITIVE:
        raise DomainError("O solver exato aceita apenas 'transfer_matrix' ou 'numerov'.")
    if grid_n < MIN_GRID_N:
        raise DomainError(f"grid_n precisa ser pelo menos {MIN_GRID_N}.")

    pot = build_potential(spec)
    _, _, k_L, k_R = _lead_wavenumbers(spec, pot, E, m0, hbar)

    if method is ScatteringMethod.TRANSFER_MATRIX:
        T, R, log_T = _transfer_matrix_solve(spec, pot, E, m0, hbar, grid_n, k_L, k_R)
        T_fine = _transfer_matrix_solve(spec, pot, E, m0, hbar, 2 * grid_n, k_L, k_R)[0]
    else:
        T, R, log_T = _numerov_solve(spec, pot, E, m0, hbar, grid_n)
        T_fine = _numerov_solve(spec, pot, E, m0, hbar, 2 * grid_n)[0]

    if not (math.isfinite(T) and math.isfinite(R)):
        raise NumericalFailureError(f"Valores não finitos: T = {T}, R = {R}.")
    defect = abs(T + R - 1.0)
    if defect > Config.UNITARITY_TOL:
        raise NumericalFailureError(
            f"Defeito de unitariedade {defect:.3e} acima de {Config.UNITARITY_TOL:.0e}.",
            details={"T": T, "R": R, "E": E},
        )
    richardson = abs(T - T_fine)
    logger.debug("exact_transmission(%s, E=%g, n=%d): T=%.6e, richardson=%.3e", method.value, E, grid_n, T, richardson)
    return ScatteringResult(
        E=E, T=T, R=R, method=method, grid_n=grid_n,
        richardson_defect=richardson, log_T=log_T,
    )


def bound_profile(
    spec: PotentialSpec,
    E: float,
    m0: Optional[float] = None,
    hbar: Optional[float] = None,
    grid: Union[int, Sequence[float], None] = None,
) -> WaveProfile:
    """
    |ψ(x)|² do estado de espalhamento com onda incidente pela esquerda,
    normalizado para amplitude incidente unitária.

    A recorrência de Numerov roda da direita para a esquerda a partir da
    onda puramente transmitida; as soluções crescentes sob a barreira são
    renormalizadas automaticamente.
    """
    m0 = m0 or Config.M0
    hbar = hbar or Config.HBAR
    pot = build_potential(spec)
    _lead_wavenumbers(spec, pot, E, m0, hbar)

    xs = _uniform_grid(spec, grid)
    h = float(xs[1] - xs[0])
    gs = 2.0 * m0 * (pot.value(xs) - E) / (hbar * hbar)
    psi, log_scale, _ = _numerov_backward(gs, h)
    A, _ = _incident_split(psi, _numerov_theta(h, float(gs[0])))
    density = np.abs(psi) ** 2 / abs(A) ** 2
    if log_scale:
        logger.debug("bound_profile: renormalização acumulada ln = %.3f", log_scale)
    return WaveProfile(xs=xs, density=density, log_scale=log_scale)


__all__ = [
    "asymptotic_levels", "segment_edges", "transfer_product",
    "exact_transmission", "bound_profile",
]
