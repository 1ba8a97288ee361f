"""
Módulo de Manipulação Centralizada de Erros
-------------------------------------------
Este arquivo define o sistema de tratamento de exceções do TunnelCORE.
Ele provê uma classe base `TunnelingError` e subclasses para cada falha
semântica que os módulos de física podem sinalizar (ponto fora do domínio,
região classificada errada, período divergente, etc.).

A classe `TunnelingGroup` conecta essas exceções à linha de comando,
garantindo que qualquer erro resulte no nome do erro impresso no stderr e
em um código de saída padronizado: 1 para falhas de cálculo, 2 para
configurações inválidas.
"""

from typing import Any, Dict, Optional

import click
from pydantic import ValidationError

# ======================================
# ==== CLASSES DE EXCEÇÃO DO TOOLKIT ====
# ======================================


class TunnelingError(Exception):
    """
    Classe base para todas as exceções do toolkit.
    Permite a definição de uma mensagem padrão, um código de saída e um
    dicionário opcional com detalhes numéricos do erro.
    """
    exit_code: int = 1
    message: str = "Ocorreu um erro inesperado no cálculo."

    def __init__(
        self,
        message: Optional[str] = None,
        exit_code: Optional[int] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message or self.message)
        if message is not None:
            self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Serializa o erro para o formato de diagnóstico da CLI."""
        payload: Dict[str, Any] = {"error": type(self).__name__, "message": self.message}
        if self.details:
            payload["details"] = self.details
        return payload


class ConfigError(TunnelingError):
    """
    Configuração inválida (schema, overrides `--set`, varredura mal formada).
    Equivale ao erro de uso da CLI (código 2).
    """
    exit_code = 2
    message = "A validação da configuração falhou."


class DomainError(TunnelingError):
    """Argumento fora do domínio permitido (x fora da tabela, |v| >= c)."""
    message = "Argumento fora do domínio da operação."


class NonDifferentiableError(TunnelingError):
    """Derivada pedida exatamente em um ponto de quebra de um potencial por partes."""
    message = "O potencial não é diferenciável neste ponto."


class RegionMismatchError(TunnelingError):
    """
    O ponto (ou intervalo) não pertence à região h/H informada.
    Sinaliza que o chamador classificou o ponto errado.
    """
    message = "O ponto não pertence à região informada."


class StepSizeError(TunnelingError):
    """Passo de tempo grande demais: o desvio de energia passou do limite."""
    message = "Passo de tempo grande demais para conservar a energia."


class DivergentPeriodError(TunnelingError):
    """Ponto de retorno tangente (V' = 0): o meio-período é infinito."""
    message = "O meio-período diverge em um ponto de retorno tangente."


class TurningPointDivergenceError(TunnelingError):
    """Amostra WKB perto demais de um ponto de retorno (1/sqrt(p) diverge)."""
    message = "Amostra dentro da zona de exclusão de um ponto de retorno."


class NoBarrierError(TunnelingError):
    """A energia está acima do pico: não existe região proibida."""
    message = "Não existe barreira abaixo da qual a energia esteja."


class NoPropagatingChannelError(TunnelingError):
    """A energia está abaixo de um dos níveis assintóticos."""
    message = "Não há canal propagante em uma das extremidades do domínio."


class NumericalFailureError(TunnelingError):
    """Defeito de unitariedade acima da tolerância ou valores não finitos."""
    message = "Falha numérica no solver."


class DomainPaddingError(TunnelingError):
    """As caudas do potencial não são planas: o domínio precisa ser alargado."""
    message = "O potencial não é assintoticamente plano; alargue o domínio."


class DynamicRangeError(TunnelingError):
    """A solução crescente excedeu a faixa de ponto flutuante."""
    message = "A solução excedeu a faixa dinâmica; use renormalização por segmentos."


class BoundaryConditionError(TunnelingError):
    """Funções de teste que não se anulam nas bordas da grade."""
    message = "As funções de teste precisam se anular nas bordas da grade."


# ==================================
# ==== HANDLER CENTRAL DA CLI ====
# ==================================


class TunnelingGroup(click.Group):
    """
    Grupo de comandos que captura e formata as exceções do toolkit.

    Isso garante que todos os erros de cálculo tenham o mesmo formato no
    stream de diagnóstico (`NomeDoErro: mensagem`) e o código de saída
    correto, em vez de um traceback.
    """

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except ValidationError as error:
            wrapped = ConfigError(f"Configuração inválida: {error.errors(include_url=False)}")
            click.echo(f"{type(wrapped).__name__}: {wrapped.message}", err=True)
            ctx.exit(wrapped.exit_code)
        except TunnelingError as error:
            click.echo(f"{type(error).__name__}: {error.message}", err=True)
            ctx.exit(error.exit_code)


# Define o que é "público" neste módulo
__all__ = [
    "TunnelingError", "ConfigError", "DomainError", "NonDifferentiableError",
    "RegionMismatchError", "StepSizeError", "DivergentPeriodError",
    "TurningPointDivergenceError", "NoBarrierError", "NoPropagatingChannelError",
    "NumericalFailureError", "DomainPaddingError", "DynamicRangeError",
    "BoundaryConditionError", "TunnelingGroup",
]
