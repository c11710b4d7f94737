"""
Schemas de Enumeración
======================

Resúmenes JSON de las enumeraciones libres de isomorfos.
"""

from typing import Optional

from pydantic import BaseModel, Field


class EnumerationSummary(BaseModel):
    """
    Resumen de una enumeración

    Uso: comando `enumerate`, GET /enumeration/*
    """
    n: int
    k: Optional[int] = Field(default=None, description="Número apex exigido; None para 'conexo'")
    filter: str = Field(..., description="Filtro aplicado, p. ej. 'connected' o 'apex-number = 2'")
    count: int = Field(..., description="Clases de isomorfismo")
    strategy: str = Field(..., description="A, B o A+B (validación cruzada)")
    count_a: Optional[int] = None
    count_b: Optional[int] = None
    wall_time: Optional[float] = Field(default=None, description="Segundos (omitido sin REPORT_TIMING)")

    model_config = {
        "json_schema_extra": {
            "example": {
                "n": 5, "k": None, "filter": "connected", "count": 21,
                "strategy": "A", "count_a": None, "count_b": None, "wall_time": 0.42
            }
        }
    }

