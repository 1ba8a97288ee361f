"""
Utilitários Compartilhados dos Subcomandos
------------------------------------------
Este módulo fornece o decorator `scan_options`, que anexa as flags comuns
(`--config`, `--set`, `--output`, `--format`, `--jobs`) a qualquer
subcomando, e as funções que carregam a configuração, executam a
varredura em paralelo e emitem a saída.

Todo subcomando segue o mesmo fluxo:
1. `load_scan_config` valida o JSON + overrides em um `ScanConfig`.
2. `run_points` calcula as linhas de cada ponto da varredura (em ordem).
3. `emit` formata CSV/JSON e grava o resultado de uma só vez.
"""

import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import click

from config import Config
from models.scan import OutputFormat, Quantity, ScanConfig, ScanPoint, apply_overrides
from utils.error_handling import ConfigError
from utils.extensions import logger, parallel_map
from utils.responses import csv_response, json_response, write_output


def scan_options(func: Callable) -> Callable:
    """
    Decorator que adiciona as flags comuns a um subcomando.
    """
    options = [
        click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
                     help="Arquivo JSON com o ScanConfig."),
        click.option("--set", "overrides", multiple=True, metavar="CHAVE=VALOR",
                     help="Override pontilhado (ex: constants.E=0.5), repetível."),
        click.option("--output", "output", type=click.Path(dir_okay=False), default=None,
                     help="Arquivo de saída (padrão: stdout)."),
        click.option("--format", "fmt", type=click.Choice([f.value for f in OutputFormat]), default=None),
        click.option("--jobs", "jobs", type=click.IntRange(min=1), default=None,
                     help="Número máximo de processos."),
    ]
    for decorate in reversed(options):
        func = decorate(func)
    return func


def load_scan_config(
    quantity: Quantity,
    config_path: Optional[str],
    overrides: Sequence[str],
    output: Optional[str] = None,
    fmt: Optional[str] = None,
) -> ScanConfig:
    """
    Lê o JSON de configuração, aplica os overrides e valida.

    Raises:
        ConfigError: arquivo ausente/ilegível, JSON inválido ou quantidade
            diferente do subcomando.
        pydantic.ValidationError: schema violado (tratado pelo grupo da CLI).
    """
    raw: Dict[str, Any] = {}
    if config_path:
        try:
            raw = json.loads(Path(config_path).read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise ConfigError(f"Arquivo de configuração não encontrado: {config_path}")
        except json.JSONDecodeError as error:
            raise ConfigError(f"JSON inválido em {config_path}: {error}")
        if not isinstance(raw, dict):
            raise ConfigError("A configuração precisa ser um objeto JSON.")

    raw = apply_overrides(raw, list(overrides))
    raw.setdefault("quantity", quantity.value)
    if raw["quantity"] != quantity.value:
        raise ConfigError(
            f"A configuração é de '{raw['quantity']}', mas o subcomando é '{quantity.command_name}'."
        )
    if output is not None:
        raw.setdefault("output", {})["path"] = output
    if fmt is not None:
        raw.setdefault("output", {})["format"] = fmt
    return ScanConfig.model_validate(raw)


def require_potential(config: ScanConfig) -> None:
    if config.potential is None:
        raise ConfigError(f"'{config.quantity.value}' exige o campo 'potential'.")


def require_constant(point: ScanPoint, name: str) -> float:
    """Constante obrigatória do ponto (vinda de `constants` ou da varredura)."""
    if name not in point.constants:
        raise ConfigError(f"A constante '{name}' é obrigatória (use --set constants.{name}=...).")
    return float(point.constants[name])


def run_points(config: ScanConfig, compute: Callable[[ScanPoint], Any], jobs: Optional[int]) -> List[Any]:
    """
    Aplica `compute` a cada ponto da varredura, em até `jobs` processos.
    O resultado segue a ordem do índice da varredura.
    """
    points = config.points()
    jobs = jobs if jobs is not None else Config.JOBS
    logger.info("%s: %d ponto(s), jobs=%d", config.quantity.value, len(points), jobs)
    return parallel_map(compute, points, jobs=jobs)


def sweep_column(config: ScanConfig, header: Sequence[str]) -> Optional[str]:
    """Nome da coluna extra com o valor varrido, quando ele não está no cabeçalho."""
    if config.sweep is None or config.sweep.parameter in header:
        return None
    return config.sweep.parameter


def emit(
    config: ScanConfig,
    header: Sequence[str],
    per_point_rows: List[List[Dict[str, Any]]],
    **extra: Any,
) -> None:
    """
    Formata e grava a saída. Cada ponto contribui com uma lista de linhas
    (dicionários com as chaves do cabeçalho).
    """
    extra_column = sweep_column(config, header)
    points = config.points()
    rows: List[Dict[str, Any]] = []
    for point, point_rows in zip(points, per_point_rows):
        for row in point_rows:
            if extra_column:
                row = {extra_column: point.value, **row}
            rows.append(row)

    columns = ([extra_column] if extra_column else []) + list(header)
    if config.output.format is OutputFormat.JSON:
        if config.potential is not None:
            extra.setdefault("potential", config.potential.to_dict())
        text = json_response(config.quantity.value, rows, **extra)
    else:
        text = csv_response(columns, [[row.get(col) for col in columns] for row in rows])
    write_output(text, config.output.path)


def option(config: ScanConfig, name: str, default: Optional[str] = None, choices: Optional[Sequence[str]] = None) -> Optional[str]:
    """Lê uma opção de enumeração de `config.options`, validando as escolhas."""
    value = config.options.get(name, default)
    if value is not None and choices is not None and value not in choices:
        raise ConfigError(f"Opção '{name}' inválida: {value!r}. Escolha entre {list(choices)}.")
    return value


__all__ = [
    "scan_options", "load_scan_config", "require_potential", "require_constant",
    "run_points", "sweep_column", "emit", "option",
]
