"""
Ponto de Entrada Principal da CLI (Application Factory)
-------------------------------------------------------
Este módulo é o coração do TunnelCORE. Ele contém a "Application Factory"
da linha de comando: uma função que monta um grupo `click` novo a cada
chamada, o que é essencial para testes (cada `CliRunner` recebe uma
instância limpa).

A função `create_app` é responsável por:
1. Instanciar o grupo principal, que já trata os erros do toolkit.
2. Configurar o logging a partir do `config.py`.
3. Registrar todos os subcomandos (um módulo por quantidade em `routes/`).
"""

from typing import Optional

import click

from utils.error_handling import TunnelingGroup
from utils.extensions import configure_logging
from routes import (
    turning_points_command, trajectory_command, period_command, wkb_profile_command,
    transmission_scan_command, operator_check_command, mass_transform_command,
)

# Uma lista centralizada de todos os subcomandos da CLI.
# A ordem é a ordem exibida no --help.
ALL_COMMANDS = [
    turning_points_command,
    trajectory_command,
    period_command,
    wkb_profile_command,
    transmission_scan_command,
    operator_check_command,
    mass_transform_command,
]


def create_app(log_level: Optional[str] = None) -> click.Group:
    """
    Cria e configura o grupo de comandos da CLI.

    Args:
        log_level (str, opcional): Nível de log; padrão `Config.LOG_LEVEL`.

    Returns:
        click.Group: O grupo `tunnelcore` com todos os subcomandos registrados.
    """
    configure_logging(log_level)

    @click.group(cls=TunnelingGroup, name="tunnelcore")
    def app():
        """TunnelCORE: tunelamento 1D em tempo real, nas representações ondulatória e corpuscular."""

    for command in ALL_COMMANDS:
        app.add_command(command)
    return app


def main() -> None:
    create_app()()


# Este bloco só é executado quando o script é chamado diretamente (ex: `python app.py period ...`)
if __name__ == "__main__":
    main()
