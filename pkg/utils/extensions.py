import logging
from typing import Callable, Iterable, List, TypeVar

from joblib import Parallel, delayed

from config import Config

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger("tunnelcore")


def configure_logging(level: str | None = None) -> None:
    """Configura o logger do pacote uma única vez (chamado pela factory da CLI)."""
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        logger.addHandler(handler)
    logger.setLevel((level or Config.LOG_LEVEL).upper())


def parallel_map(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> List[R]:
    """
    Aplica `fn` a cada item, em até `jobs` processos.
    A ordem do resultado é sempre a ordem de entrada, nunca a de conclusão.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    return Parallel(n_jobs=jobs)(delayed(fn)(item) for item in items)
