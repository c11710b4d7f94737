"""
Schemas Package
===============

Este paquete contiene todos los schemas Pydantic de los reportes y de la API.

Diferencia entre models/ y schemas/:
-----------------------------------
- models/: Tipos de dominio con los que calculan los servicios
- schemas/: Contratos JSON que emiten el CLI y la API

Los valores exactos se serializan siempre como RadicalOut {exact, decimal}.
"""

from .common import PaginatedResponse, PaginationMeta, RadicalOut
from .randic import GraphTextInput, RandicEntry
from .apex import ApexReport, NonRegularityAudit, RegularWitness
from .audit import (
    ClaimResult,
    ConjectureCandidate,
    ConjectureReport,
    ConstructionResponse,
    FamilyMembershipRequest,
    FamilyMembershipResponse,
    GridPoint,
    LemmaAudit,
    LemmaGrid,
    VerificationReport,
    Violation,
)
from .enumeration import EnumerationSummary
from .run import RunConfig, RunInfo

__all__ = [
    # Common
    "PaginatedResponse",
    "PaginationMeta",
    "RadicalOut",
    # Randić / apex
    "GraphTextInput",
    "RandicEntry",
    "ApexReport",
    "NonRegularityAudit",
    "RegularWitness",
    # Auditorías
    "ClaimResult",
    "ConjectureCandidate",
    "ConjectureReport",
    "GridPoint",
    "LemmaAudit",
    "LemmaGrid",
    "VerificationReport",
    "Violation",
    # Familia
    "ConstructionResponse",
    "FamilyMembershipRequest",
    "FamilyMembershipResponse",
    # Enumeración
    "EnumerationSummary",
    # Ejecución
    "RunConfig",
    "RunInfo",
]
