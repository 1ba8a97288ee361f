"""
Laboratório de Operadores em Grade
----------------------------------
Momento hermitiano p̂ = -iħ∂ₓ e anti-hermitiano p̂ = -ħ∂ₓ discretizados com
diferenças centrais no interior e estênceis unilaterais de segunda ordem
nas bordas.

As verificações medem defeitos (hermiticidade, comutador canônico) e a ordem
de convergência sob refinamento. Nenhuma delas afirma que [x̂, p̂] vale
exatamente na grade: o que se certifica é o limite contínuo.

Convenção de contorno: as funções de teste se anulam nas bordas da grade.
"""

import math
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.integrate import trapezoid

from config import Config
from models.operators import DefectReport, GridFunction, MomentumRep, RepresentationParams
from utils.error_handling import BoundaryConditionError, DomainError
from utils.extensions import logger, parallel_map

BATTERY_DOMAIN = (-15.0, 15.0)
BATTERY_WIDTHS = (0.75, 1.0, 1.5)
MODULATION_K = 2.0
BUMP_SUPPORTS = ((-10.0, 10.0), (-6.0, 2.0))

CHECKS = ("hermiticity", "commutator", "eigenvalue")
EIGEN_DOMAIN = (-1.0, 1.0)


def _derivative(values: np.ndarray, spacing: float) -> np.ndarray:
    out = np.empty_like(values)
    out[1:-1] = (values[2:] - values[:-2]) / (2.0 * spacing)
    out[0] = (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * spacing)
    out[-1] = (3.0 * values[-1] - 4.0 * values[-2] + values[-3]) / (2.0 * spacing)
    return out


def momentum_apply(rep: Union[str, MomentumRep], f: GridFunction, hbar: Optional[float] = None) -> GridFunction:
    """Aplica p̂ (representação `rep`) a f, na mesma grade."""
    rep = MomentumRep(rep)
    hbar = hbar or Config.HBAR
    return f.with_values(rep.prefactor(hbar) * _derivative(f.values, f.spacing))


def inner_product(f: GridFunction, g: GridFunction) -> complex:
    """⟨f, g⟩ pela regra do trapézio de conj(f)·g."""
    integrand = np.conj(f.values) * g.values
    return complex(trapezoid(integrand, dx=f.spacing))


def _check_boundaries(functions: Iterable[GridFunction]) -> None:
    for f in functions:
        edge = max(abs(f.values[0]), abs(f.values[-1]))
        if edge > Config.BOUNDARY_TOL:
            raise BoundaryConditionError(
                f"Função de teste vale {edge:.3e} na borda (limite {Config.BOUNDARY_TOL:.0e}).",
                details={"boundary_value": float(edge)},
            )


def hermiticity_defect(
    rep: Union[str, MomentumRep],
    pairs: Sequence[Tuple[GridFunction, GridFunction]],
    hbar: Optional[float] = None,
) -> DefectReport:
    """
    max |⟨f, p̂g⟩ - ⟨p̂f, g⟩| (wave) ou max |⟨f, p̂g⟩ + ⟨p̂f, g⟩| (corpuscular).

    Raises:
        BoundaryConditionError: funções que não se anulam nas bordas.
        DomainError: pares em grades diferentes.
    """
    rep = MomentumRep(rep)
    hbar = hbar or Config.HBAR
    if not pairs:
        raise DomainError("A bateria de hermiticidade precisa de pelo menos um par.")
    xs = pairs[0][0].xs
    for f, g in pairs:
        if f.n != len(xs) or g.n != len(xs) or not (np.array_equal(f.xs, xs) and np.array_equal(g.xs, xs)):
            raise DomainError("Todos os pares precisam compartilhar a mesma grade.")
    _check_boundaries(fn for pair in pairs for fn in pair)

    sign = -1.0 if rep is MomentumRep.WAVE else 1.0
    defect = 0.0
    for f, g in pairs:
        lhs = inner_product(f, momentum_apply(rep, g, hbar))
        rhs = inner_product(momentum_apply(rep, f, hbar), g)
        defect = max(defect, abs(lhs + sign * rhs))
    return DefectReport(rep=rep, grid_n=len(xs), defect=defect, check="hermiticity")


def commutator_defect(rep: Union[str, MomentumRep], f: GridFunction, hbar: Optional[float] = None) -> DefectReport:
    """
    max_j |([x̂, p̂]f)_j - κ f_j| nos pontos interiores, κ = iħ (wave) ou ħ
    (corpuscular). Com diferenças centrais vale |κ|·|(f_{j+1} + f_{j-1})/2 - f_j|.
    """
    rep = MomentumRep(rep)
    hbar = hbar or Config.HBAR
    p_f = momentum_apply(rep, f, hbar).values
    p_xf = momentum_apply(rep, f.with_values(f.xs * f.values), hbar).values
    commutator = f.xs * p_f - p_xf
    residual = commutator[1:-1] - rep.kappa(hbar) * f.values[1:-1]
    return DefectReport(rep=rep, grid_n=f.n, defect=float(np.max(np.abs(residual))), check="commutator")


def eigenvalue_estimate(rep: Union[str, MomentumRep], f: GridFunction, hbar: Optional[float] = None) -> complex:
    """Média de (p̂f)/f nos pontos interiores."""
    p_f = momentum_apply(rep, f, hbar)
    return complex(np.mean(p_f.values[1:-1] / f.values[1:-1]))


def eigenvalue_defect(rep: Union[str, MomentumRep], momentum: float, n: int, hbar: Optional[float] = None) -> DefectReport:
    """
    |estimativa - autovalor esperado| para φ(x) = e^{-px/ħ} em `EIGEN_DOMAIN`.
    O esperado é p (corpuscular, real) ou ip (wave, imaginário puro).
    """
    rep = MomentumRep(rep)
    hbar = hbar or Config.HBAR
    f = GridFunction.sample(lambda xs: np.exp(-momentum * xs / hbar), EIGEN_DOMAIN[0], EIGEN_DOMAIN[1], n)
    expected = complex(momentum) if rep is MomentumRep.CORPUSCULAR else 1j * momentum
    estimate = eigenvalue_estimate(rep, f, hbar)
    return DefectReport(rep=rep, grid_n=n, defect=abs(estimate - expected), check="eigenvalue")


def gaussian_battery(xs: np.ndarray) -> List[GridFunction]:
    """
    Funções de teste que se anulam nas bordas de `BATTERY_DOMAIN`: gaussianas
    de três larguras, gaussianas moduladas por e^{ikx} e bumps sin².
    """
    xs = np.asarray(xs, dtype=float)
    battery = []
    for sigma in BATTERY_WIDTHS:
        envelope = np.exp(-0.5 * (xs / sigma) ** 2)
        battery.append(GridFunction(xs, envelope))
        battery.append(GridFunction(xs, envelope * np.exp(1j * MODULATION_K * xs)))
    for lo, hi in BUMP_SUPPORTS:
        inside = (xs >= lo) & (xs <= hi)
        bump = np.where(inside, np.sin(np.pi * (xs - lo) / (hi - lo)) ** 2, 0.0)
        battery.append(GridFunction(xs, bump))
    return battery


def _battery_defect(args: Tuple[MomentumRep, str, int, float, float]) -> DefectReport:
    rep, check, n, hbar, momentum = args
    if check == "eigenvalue":
        return eigenvalue_defect(rep, momentum, n, hbar)
    xs = np.linspace(BATTERY_DOMAIN[0], BATTERY_DOMAIN[1], n)
    battery = gaussian_battery(xs)
    if check == "hermiticity":
        return hermiticity_defect(rep, list(product(battery, repeat=2)), hbar)
    reports = [commutator_defect(rep, f, hbar) for f in battery]
    return max(reports, key=lambda report: report.defect)


def order_estimate(coarse: float, fine: float, ratio: float) -> float:
    """
    log(d_grosso/d_fino)/log(Δ_grosso/Δ_fino). Defeitos no piso de
    arredondamento contam como ordem infinita.
    """
    if min(coarse, fine) <= Config.ROUNDOFF_FLOOR:
        return math.inf
    return math.log(coarse / fine) / math.log(ratio)


def convergence_study(
    rep: Union[str, MomentumRep],
    check: str,
    grids: Sequence[int],
    hbar: Optional[float] = None,
    jobs: int = 1,
    momentum: float = 1.0,
) -> List[DefectReport]:
    """
    Defeito da bateria em cada grade de `grids` (número de pontos), com a
    ordem de convergência estimada contra a grade anterior. A verificação
    "eigenvalue" usa e^{-px/ħ} com p = `momentum` em vez da bateria.
    """
    rep = MomentumRep(rep)
    hbar = hbar or Config.HBAR
    if check not in CHECKS:
        raise DomainError(f"Verificação desconhecida: {check!r}. Use {CHECKS}.")
    grids = [int(n) for n in grids]
    raw = parallel_map(_battery_defect, [(rep, check, n, hbar, momentum) for n in grids], jobs=jobs)

    domain = EIGEN_DOMAIN if check == "eigenvalue" else BATTERY_DOMAIN
    width = domain[1] - domain[0]
    reports = [raw[0]]
    for prev_n, prev, current in zip(grids, raw, raw[1:]):
        ratio = (width / (prev_n - 1)) / (width / (current.grid_n - 1))
        order = order_estimate(prev.defect, current.defect, ratio)
        reports.append(DefectReport(
            rep=rep, grid_n=current.grid_n, defect=current.defect,
            convergence_order_estimate=order, check=check,
        ))
    logger.debug("convergence_study(%s, %s): %s", rep.value, check, [r.defect for r in reports])
    return reports


# ==================================
# ==== LEIS DE TRANSFORMAÇÃO ====
# ==================================

def _lorentz_root(v: float, c: float) -> float:
    if c <= 0:
        raise DomainError("A velocidade da luz c precisa ser positiva.")
    if not abs(v) < c:
        raise DomainError(f"|v| = {abs(v)} precisa ser menor que c = {c}.", details={"v": v, "c": c})
    beta = v / c
    return math.sqrt(1.0 - beta * beta)


def mass_transform(rep: Union[str, MomentumRep], m0: float, v: float, c: float = 1.0) -> float:
    """wave: m₀/√(1 - v²/c²); corpuscular: m₀·√(1 - v²/c²)."""
    rep = MomentumRep(rep)
    root = _lorentz_root(v, c)
    return m0 / root if rep is MomentumRep.WAVE else m0 * root


def moving_frequency(rep: Union[str, MomentumRep], params: RepresentationParams, v: float) -> float:
    """wave: ω₀/√(1 - v²/c²); corpuscular: ω₀·√(1 - v²/c²), o relógio interno atrasa."""
    rep = MomentumRep(rep)
    root = _lorentz_root(v, params.c)
    return params.omega0 / root if rep is MomentumRep.WAVE else params.omega0 * root


def moving_energy(rep: Union[str, MomentumRep], params: RepresentationParams, v: float) -> float:
    """ħ vezes a frequência em movimento."""
    return params.hbar * moving_frequency(rep, params, v)


__all__ = [
    "momentum_apply", "inner_product", "hermiticity_defect", "commutator_defect",
    "eigenvalue_estimate", "eigenvalue_defect", "gaussian_battery", "order_estimate", "convergence_study",
    "mass_transform", "moving_frequency", "moving_energy", "BATTERY_DOMAIN", "CHECKS",
]
