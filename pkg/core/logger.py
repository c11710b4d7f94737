"""
Logging
=======

Configuración única del logging de la aplicación.

Los mensajes usan etiquetas entre corchetes ([ENUM], [APEX], [AUDIT], [OK])
y salen por stderr para no mezclarse con los reportes en stdout.
"""

import logging
import sys
from typing import Optional

from core.config import settings

ROOT_LOGGER = "apexrandic"
_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def setup_logging(level: Optional[str] = None) -> None:
    """Configura el logger raíz del paquete (idempotente)"""
    root = logging.getLogger(ROOT_LOGGER)
    root.setLevel((level or settings.LOG_LEVEL).upper())
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        root.addHandler(handler)
    root.propagate = False


def get_logger(name: str) -> logging.Logger:
    """Logger hijo: apexrandic.<name>"""
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")
