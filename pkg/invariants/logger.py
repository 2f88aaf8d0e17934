import logging

from config import settings

_logger = logging.getLogger("binary_invariants")
if not _logger.handlers:
    level = str(settings.LOG_LEVEL).upper()
    _logger.setLevel(getattr(logging, level, logging.WARNING))
    # stderr: stdout queda reservado para los resultados de la CLI
    handler = logging.StreamHandler()
    formatter = logging.Formatter(
        fmt="%(asctime)s %(levelname)s %(name)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    handler.setFormatter(formatter)
    _logger.addHandler(handler)

logger = _logger


def set_level(level: str) -> None:
    """Cambia el nivel del logger en caliente (flag --log-level de la CLI)."""
    _logger.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
