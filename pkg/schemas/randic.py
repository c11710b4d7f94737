"""
Schemas del Índice de Randić
============================

Schemas incluidos:
-----------------
1. GraphTextInput: texto graph6 o lista de aristas (POST /randic, /apex)
2. RandicEntry: índice exacto por grafo
"""

from typing import Dict, Optional

from pydantic import BaseModel, Field, field_validator

from models.graph import Graph
from schemas.common import RadicalOut


class GraphTextInput(BaseModel):
    """
    Uno o más grafos en texto

    Se detecta el formato: si la primera línea útil empieza con un dígito o
    '#' es lista de aristas; si no, graph6 (una cadena por línea).
    """
    text: str = Field(..., description="Contenido graph6 o lista de aristas")

    @field_validator("text")
    @classmethod
    def validate_text(cls, v: str) -> str:
        if not v.strip():
            raise ValueError("El texto no contiene grafos")
        return v

    model_config = {
        "json_schema_extra": {
            "example": {"text": "C~\nEhEG\n"}
        }
    }


class RandicEntry(BaseModel):
    """Índice de Randić exacto de un grafo de entrada"""
    line: Optional[int] = Field(default=None, description="Línea del archivo de entrada")
    graph6: str
    n: int
    m: int
    value: RadicalOut = Field(..., description="R(G)")
    gap: RadicalOut = Field(..., description="(1/2)·Σ (1/√d(u) − 1/√d(v))²")
    spectrum: Dict[str, int] = Field(..., description="Conteos c_{a,b} con clave 'a,b'")
    asymmetric_edges: int
    gap_identity: Optional[bool] = Field(
        default=None,
        description="R = n/2 − gap verificado exactamente; None si hay vértices aislados"
    )

    @classmethod
    def of(cls, g: Graph, line: Optional[int] = None) -> "RandicEntry":
        from core.exceptions import DomainError
        from services.graph_io_service import write_graph6
        from services.randic_service import randic, verify_gap_identity

        result = randic(g)
        try:
            identity = verify_gap_identity(g)
        except DomainError:
            identity = None
        return cls(
            line=line,
            graph6=write_graph6(g),
            n=g.n,
            m=g.m,
            value=RadicalOut.of(result.value),
            gap=RadicalOut.of(result.gap),
            spectrum=result.spectrum.as_dict(),
            asymmetric_edges=result.spectrum.asymmetric,
            gap_identity=identity,
        )
