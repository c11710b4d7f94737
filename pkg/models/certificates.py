"""
Certificados y Resultados de Dominio
====================================

Objetos de resultado que devuelven los servicios. Son dataclasses inmutables;
los schemas de `schemas/` los convierten en reportes JSON.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from models.enums import MembershipVerdict
from models.graph import DegreePairSpectrum, Graph
from models.radical import RadicalValue


@dataclass(frozen=True)
class RandicResult:
    """
    Índice de Randić exacto

    Atributos:
        value: R(G) = Σ 1/√(d(u)d(v))
        gap: (1/2)·Σ (1/√d(u) − 1/√d(v))²
        spectrum: conteos c_{a,b}
    """
    value: RadicalValue
    gap: RadicalValue
    spectrum: DegreePairSpectrum


@dataclass(frozen=True)
class ApexCertificate:
    """
    Número apex con testigo

    El residual es delete_vertices(g, witness) y siempre es un árbol.
    """
    k: int
    witness: Tuple[int, ...]
    residual: Graph


@dataclass(frozen=True)
class FamilyMembership:
    """Veredicto de pertenencia a la familia extremal (primera condición que falla)"""
    graph: Graph
    k: int
    degrees_ok: bool
    asym_count: int
    apex_k: Optional[int]
    verdict: MembershipVerdict
    value: Optional[RadicalValue] = None

    @property
    def is_member(self) -> bool:
        return self.verdict is MembershipVerdict.MEMBER


@dataclass(frozen=True)
class ConstructionResult:
    """
    Resultado de construct_member

    `graph` es None cuando no se encontró miembro (NotFound); `searched`
    describe el espacio recorrido en ambos casos.
    """
    k: int
    n: int
    graph: Optional[Graph]
    source: str
    searched: Tuple[str, ...] = field(default=())

    @property
    def found(self) -> bool:
        return self.graph is not None
