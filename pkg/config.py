"""
Módulo de Configuração do TunnelCORE
------------------------------------
Este arquivo centraliza a configuração do toolkit. Ele utiliza a biblioteca
python-dotenv para carregar variáveis de ambiente de um arquivo .env,
permitindo ajustar unidades, resoluções e paralelismo sem tocar no código.

A classe `Config` agrupa as variáveis lidas do ambiente e as constantes
numéricas congeladas que os módulos de física usam como padrão. Qualquer
argumento passado explicitamente a uma função sobrepõe estes valores.
"""

import os
from dotenv import load_dotenv

# Carrega as variáveis de ambiente do arquivo .env localizado na raiz do projeto.
load_dotenv()


class Config:
    """
    Classe de configuração com todas as variáveis utilizadas pelo toolkit.
    """

    # --- Unidades naturais (sobrepostas por chamada) ---
    HBAR = float(os.getenv("TUNNEL_HBAR", "1.0"))
    M0 = float(os.getenv("TUNNEL_M0", "1.0"))

    # --- Localização de pontos de retorno ---
    # Número de células da varredura inicial de sinais de V(x) - E.
    SCAN_CELLS = int(os.getenv("TUNNEL_SCAN_CELLS", "4096"))
    # tol_x = BISECTION_REL_TOL * largura do domínio
    BISECTION_REL_TOL = 1e-12
    # Tolerância relativa para aceitar E = V(x) (velocidade nula, raízes tangentes).
    ENERGY_REL_TOL = 1e-9

    # --- Quadraturas ---
    GAUSS_ORDER = int(os.getenv("TUNNEL_GAUSS_ORDER", "64"))

    # --- Dinâmica clássica ---
    V_STOP = 1e-8
    # tol_cons = CONSERVATION_CONSTANT * dt^2 * max(1, |E|)
    CONSERVATION_CONSTANT = 1.0
    # A integração falha quando o desvio de energia passa de DRIFT_FACTOR * tol_cons.
    DRIFT_FACTOR = 100.0

    # --- WKB ---
    # dist_min = WKB_EXCLUSION_FRACTION * largura da região
    WKB_EXCLUSION_FRACTION = 1e-6

    # --- Solver exato ---
    GRID_N = int(os.getenv("TUNNEL_GRID_N", "512"))
    NUMEROV_N = int(os.getenv("TUNNEL_NUMEROV_N", "4096"))
    UNITARITY_TOL = 1e-10
    FLATNESS_TOL = 1e-8
    FLAT_ZONE_FRACTION = 0.05
    # Limiar de renormalização da recorrência de Numerov.
    NUMEROV_RESCALE = 1e150

    # --- Laboratório de operadores ---
    BOUNDARY_TOL = 1e-12
    ROUNDOFF_FLOOR = 1e-12

    # --- CLI ---
    JOBS = int(os.getenv("TUNNEL_JOBS", "1"))
    LOG_LEVEL = os.getenv("TUNNEL_LOG_LEVEL", "WARNING")
