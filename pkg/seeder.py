"""
Script de Seeding das Configurações de Exemplo
----------------------------------------------
Este script cria, em `configs/`, um `ScanConfig` de exemplo para cada
subcomando da CLI, prontos para uso com `--config`.

Ele é projetado para ser IDEMPOTENTE: arquivos que já existem não são
sobrescritos, então ajustes locais sobrevivem a novas execuções.

Uso:
    python seeder.py [diretório]
"""

import json
import sys
from pathlib import Path
from typing import Dict, List, Tuple

from models.scan import ScanConfig

DEFAULT_DIRECTORY = "configs"

# --- Configurações Iniciais Centralizadas ---

SQUARE_BARRIER = {"family": "square_barrier", "params": {"V0": 1.0, "width": 2.0, "center": 0.0}, "domain": [-6.0, 6.0]}
HARMONIC_WELL = {"family": "harmonic_well", "params": {"k": 1.0, "center": 0.0}, "domain": [-4.0, 4.0]}
PARABOLIC_BARRIER = {"family": "parabolic_barrier", "params": {"V0": 1.0, "k": 1.0, "center": 0.0}, "domain": [-4.0, 4.0]}
GAUSSIAN_BARRIER = {"family": "gaussian_barrier", "params": {"V0": 1.0, "sigma": 2.0, "center": 0.0}, "domain": [-16.0, 16.0]}

EXAMPLE_CONFIGS: Dict[str, Dict] = {
    "turning_points.json": {
        "potential": HARMONIC_WELL,
        "quantity": "turning_points",
        "constants": {"E": 0.5},
    },
    "trajectory.json": {
        "potential": PARABOLIC_BARRIER,
        "quantity": "trajectory",
        "constants": {"x0": 0.0, "v0": 1.0, "E": 0.5, "dt": 0.001, "t_end": 10.0},
        "options": {"region": "H", "halt": "false"},
    },
    "period.json": {
        "potential": HARMONIC_WELL,
        "quantity": "period",
        "constants": {"E": 0.5},
        "output": {"format": "json"},
    },
    "wkb_profile.json": {
        "potential": PARABOLIC_BARRIER,
        "quantity": "wkb_profile",
        "constants": {"E": 0.5, "hbar": 0.1, "x_ref": 0.0, "x_start": -0.9, "x_stop": 0.9, "n": 181},
        "options": {"region": "H", "branch": "decaying"},
    },
    "transmission_scan.json": {
        "potential": SQUARE_BARRIER,
        "quantity": "transmission_scan",
        "sweep": {"parameter": "E", "start": 0.1, "stop": 0.9, "count": 9},
        "constants": {"grid_n": 512},
    },
    "hbar_scan.json": {
        "potential": GAUSSIAN_BARRIER,
        "quantity": "transmission_scan",
        "sweep": {"parameter": "hbar", "start": 0.25, "stop": 1.0, "count": 7, "spacing": "log"},
        "constants": {"E": 0.5, "grid_n": 4096},
    },
    "operator_check.json": {
        "quantity": "operator_check",
        "constants": {"grid_n": 256, "doublings": 2, "V0": 1.0, "E": 0.5},
        "options": {"rep": "both", "check": "all"},
    },
    "mass_transform.json": {
        "quantity": "mass_transform",
        "sweep": {"parameter": "v", "start": -0.9, "stop": 0.9, "count": 19},
        "constants": {"m0": 1.0, "c": 1.0},
    },
}

# --- Funções Auxiliares ---


def _find_or_create(path: Path, payload: Dict) -> Tuple[Path, bool]:
    """Mantém o arquivo existente ou cria um novo, validado antes de gravar."""
    if path.exists():
        return path, False
    ScanConfig.model_validate(payload)
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return path, True


def seed_configs(directory: str = DEFAULT_DIRECTORY) -> List[Tuple[Path, bool]]:
    """Cria os exemplos que faltam e retorna (caminho, criado) para cada um."""
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    results = []
    for name, payload in EXAMPLE_CONFIGS.items():
        path, created = _find_or_create(target / name, payload)
        if created:
            print(f"    -> Configuração '{path}' criada.")
        else:
            print(f"    -> Configuração '{path}' já existe.")
        results.append((path, created))
    return results


def main_seeder(argv: List[str]) -> None:
    """Função principal que orquestra todo o processo de seeding."""
    directory = argv[0] if argv else DEFAULT_DIRECTORY
    print("--- INICIANDO CRIAÇÃO DAS CONFIGURAÇÕES DE EXEMPLO ---")
    seed_configs(directory)
    print("\n--- SEEDING CONCLUÍDO COM SUCESSO! ---")


if __name__ == "__main__":
    main_seeder(sys.argv[1:])
