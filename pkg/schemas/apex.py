"""
Schemas de Número Apex
======================

Schemas incluidos:
-----------------
1. ApexReport: certificado por grafo (testigo y árbol residual)
2. RegularWitness / NonRegularityAudit: escaneo de k-apex trees regulares
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class ApexReport(BaseModel):
    """
    Número apex de un grafo de entrada

    Uso: POST /apex, comando `apex`
    """
    line: Optional[int] = Field(default=None, description="Línea del archivo de entrada")
    graph6: str
    n: int
    m: int
    k: Optional[int] = Field(default=None, description="Número apex; None si hubo error")
    witness: List[int] = Field(default_factory=list, description="Conjunto X lexicográficamente mínimo")
    residual: Optional[str] = Field(default=None, description="G − X en graph6 (siempre un árbol)")
    error: Optional[str] = Field(default=None, description="Motivo por el que no se calculó")

    @classmethod
    def of(cls, g, line: Optional[int] = None) -> "ApexReport":
        """Certificado de g; un grafo desconexo queda como entrada con `error`"""
        from core.exceptions import DomainError
        from services.apex_service import apex_number
        from services.graph_io_service import write_graph6

        try:
            cert = apex_number(g)
        except DomainError as exc:
            return cls(line=line, graph6=write_graph6(g), n=g.n, m=g.m, error=str(exc))
        return cls(
            line=line, graph6=write_graph6(g), n=g.n, m=g.m, k=cert.k,
            witness=list(cert.witness), residual=write_graph6(cert.residual),
        )

    model_config = {
        "json_schema_extra": {
            "example": {
                "line": 1, "graph6": "C~", "n": 4, "m": 6, "k": 2,
                "witness": [0, 1], "residual": "A_", "error": None
            }
        }
    }


class RegularWitness(BaseModel):
    """
    k-apex tree m-regular con las cantidades de la prueba de no regularidad

    l es el número de aristas entre X y V(G − X).
    """
    graph6: str
    degree: int = Field(..., description="Grado común m")
    witness: List[int]
    cross_edges: int = Field(..., description="l")
    identity_ok: bool = Field(..., description="l = mn − mk − 2n + 2k + 2")
    bound_ok: bool = Field(..., description="l ≤ mk")
    chain_ok: bool = Field(..., description="m(n − 2k) ≤ 2n − 2k − 2")
    pendant_ok: bool = Field(..., description="Toda hoja del residual tiene grado ≤ k + 1 en G")


class NonRegularityAudit(BaseModel):
    k: int
    n: int
    scanned: int
    regular_witnesses: List[RegularWitness] = Field(default_factory=list)
    threshold: int = Field(..., description="4k − 1")
    theorem_consistent: bool
