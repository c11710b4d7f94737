"""
Excepciones del Dominio
=======================

Jerarquía de errores de los servicios.

Todas heredan de ValueError, igual que los errores de negocio que lanzan los
servicios; los routers los traducen a HTTPException y el CLI a códigos de salida:

- UsageError, GraphFormatError, EmptyGraphError, DomainError, InfeasibleError → exit 2
- ConsistencyError → error interno (indica un bug aritmético o de generación)
"""

from typing import Optional


class ApexRandicError(ValueError):
    """Raíz de todos los errores del paquete"""


class UsageError(ApexRandicError):
    """Argumentos fuera de rango o precondición no cumplida"""


class DomainError(ApexRandicError):
    """Entrada fuera del dominio matemático de la operación"""


class EmptyGraphError(ApexRandicError):
    """Se pidió un grafo sin vértices (n = 0)"""


class GraphFormatError(ApexRandicError):
    """
    Texto graph6 o lista de aristas mal formado

    Guarda la posición del problema: `offset` (byte dentro de la cadena graph6)
    y/o `line` (línea del archivo, base 1).
    """

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.detail = message
        self.offset = offset
        self.line = line
        location = []
        if line is not None:
            location.append(f"línea {line}")
        if offset is not None:
            location.append(f"byte {offset}")
        suffix = f" ({', '.join(location)})" if location else ""
        super().__init__(f"{message}{suffix}")


class InfeasibleError(ApexRandicError):
    """El trabajo pedido excede la guarda de costo configurada"""

    def __init__(self, message: str, estimate: Optional[int] = None):
        self.estimate = estimate
        if estimate is not None:
            message = f"{message} (costo estimado: {estimate:,})"
        super().__init__(message)


class ConsistencyError(ApexRandicError):
    """Violación de un invariante interno: señala un bug, no un hallazgo"""
