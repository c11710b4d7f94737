from typing import Generic, List, TypeVar

from pydantic import BaseModel, Field

from models.radical import RadicalValue

T = TypeVar("T")


class PaginationMeta(BaseModel):
    """Metadatos de paginación"""
    page: int = Field(..., description="Número de página actual")
    limit: int = Field(..., description="Elementos por página")
    totalItems: int = Field(..., description="Total de elementos encontrados")
    totalPages: int = Field(..., description="Total de páginas disponibles")
    hasNextPage: bool = Field(..., description="¿Hay página siguiente?")
    hasPrevPage: bool = Field(..., description="¿Hay página anterior?")


class PaginatedResponse(BaseModel, Generic[T]):
    """
    Respuesta genérica paginada.

    Estructura:
    {
        "data": [...],
        "meta": { ... }
    }
    """
    data: List[T] = Field(..., description="Lista de resultados")
    meta: PaginationMeta = Field(..., description="Metadatos de paginación")


class RadicalOut(BaseModel):
    """
    Valor exacto serializado

    `exact` usa la forma textual "q0 + q1*sqrt(s1) + ..." y se puede volver a
    leer con RadicalValue.parse; `decimal` tiene las cifras significativas
    configuradas, tomadas de un encierro riguroso.
    """
    exact: str = Field(..., description="Forma exacta, p. ej. '8/3 + 1/3*sqrt(6)'")
    decimal: str = Field(..., description="Decimal con DECIMAL_DIGITS cifras significativas")

    @classmethod
    def of(cls, value: RadicalValue) -> "RadicalOut":
        return cls(exact=value.to_text(), decimal=value.to_decimal())

    def to_value(self) -> RadicalValue:
        return RadicalValue.parse(self.exact)

    model_config = {
        "json_schema_extra": {
            "example": {"exact": "8/3 + 1/3*sqrt(6)", "decimal": "3.4831632476"}
        }
    }
