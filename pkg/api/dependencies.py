"""
Dependencias de FastAPI
=======================

Parámetros comunes de los endpoints y traducción de errores de dominio a HTTP.
"""

from typing import Optional

from fastapi import HTTPException, Query

from core.exceptions import ApexRandicError, ConsistencyError, InfeasibleError
from models.enums import EnumerationStrategy

# Tamaño máximo de un archivo de grafos subido (1 MB)
MAX_UPLOAD_BYTES = 1024 * 1024


def http_error(exc: Exception) -> HTTPException:
    """
    Traduce una excepción del servicio a HTTPException

    - InfeasibleError → 422 (el rango pedido excede la guarda de costo)
    - ConsistencyError → 500 (bug interno)
    - Otros ApexRandicError / ValueError → 400
    """
    if isinstance(exc, InfeasibleError):
        return HTTPException(status_code=422, detail=str(exc))
    if isinstance(exc, ConsistencyError) or not isinstance(exc, (ApexRandicError, ValueError)):
        return HTTPException(status_code=500, detail=f"Error interno: {exc}")
    return HTTPException(status_code=400, detail=str(exc))


def strategy_param(
    strategy: Optional[EnumerationStrategy] = Query(None, description="Estrategia de enumeración (A, B, auto)")
) -> Optional[EnumerationStrategy]:
    return strategy


def allow_large_param(
    allow_large: bool = Query(False, description="Levanta las guardas de enumeración")
) -> bool:
    return allow_large
