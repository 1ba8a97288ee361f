"""
Módulo de Respostas Padronizadas da CLI
---------------------------------------
Este utilitário fornece funções helper para gerar as saídas CSV e JSON de
forma consistente em todos os subcomandos. Ao utilizar estas funções,
garantimos que duas execuções da mesma configuração produzam exatamente os
mesmos bytes, independentemente do número de processos usados.

A estrutura padrão é:
- JSON: {"schema": 1, "quantity": "...", "rows": [...], ...}
- CSV:  cabeçalho documentado por quantidade, uma linha por amostra.
"""

import json
import math
import numbers
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

import click

SCHEMA_VERSION = 1


def format_float(value: Any) -> str:
    """
    Formata um valor numérico na menor representação que faz round-trip
    (no máximo 17 dígitos significativos).
    """
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, float) or hasattr(value, "__float__"):
        number = float(value)
        if math.isnan(number):
            return "nan"
        if math.isinf(number):
            return "inf" if number > 0 else "-inf"
        return repr(number)
    if value is None:
        return ""
    return str(value)


def _json_safe(value: Any) -> Any:
    """Converte floats não finitos e tipos numpy para algo serializável."""
    if isinstance(value, dict):
        return {key: _json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(item) for item in value]
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if hasattr(value, "__float__"):
        number = float(value)
        if math.isfinite(number):
            return number
        return format_float(number)
    return value


def csv_response(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    Gera o texto CSV para um cabeçalho e uma sequência de linhas.

    Args:
        header (Sequence[str]): Nomes das colunas, na ordem documentada.
        rows (Iterable[Sequence]): Linhas com o mesmo número de campos.

    Returns:
        str: Texto CSV terminado em nova linha.
    """
    lines = [",".join(header)]
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"Linha com {len(row)} campos para {len(header)} colunas.")
        lines.append(",".join(format_float(field) for field in row))
    return "\n".join(lines) + "\n"


def json_response(quantity: str, rows: List[Dict[str, Any]], **extra: Any) -> str:
    """
    Gera o documento JSON versionado de uma quantidade.

    Args:
        quantity (str): Nome da quantidade calculada (ex: "period").
        rows (List[Dict]): Uma entrada por ponto da varredura.
        **extra: Campos adicionais de nível superior (ex: potencial usado).

    Returns:
        str: Documento JSON com `"schema": 1`.
    """
    payload: Dict[str, Any] = {"schema": SCHEMA_VERSION, "quantity": quantity}
    payload.update(extra)
    payload["rows"] = rows
    return json.dumps(_json_safe(payload), indent=2) + "\n"


def write_output(text: str, path: Optional[str]) -> None:
    """Grava o texto no arquivo indicado ou, sem caminho, no stdout."""
    if path is None:
        click.echo(text, nl=False)
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")


# Define o que é "público" neste módulo
__all__ = ["format_float", "csv_response", "json_response", "write_output", "SCHEMA_VERSION"]
