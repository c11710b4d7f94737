"""
Modelos de Dominio
==================

Tipos de valor inmutables sobre los que trabajan los servicios.

Estructura:
-----------
- enums.py: Enumeraciones (clases de arista, signos, lemas, veredictos)
- graph.py: Grafo simple no dirigido con adyacencia en máscaras de bits
- radical.py: Números de la forma q0 + Σ qi·√si con aritmética exacta
- certificates.py: Resultados de los servicios (Randić, apex, familia)
"""

from .enums import (
    AuditClaim,
    ClaimKind,
    EdgeKind,
    EnumerationStrategy,
    LemmaId,
    MembershipVerdict,
    OutputFormat,
    Sign,
    Verdict,
)
from .graph import DegreePairSpectrum, EdgeClass, Graph
from .radical import RadicalValue
from .certificates import ApexCertificate, ConstructionResult, FamilyMembership, RandicResult

__all__ = [
    # Enums
    "AuditClaim",
    "ClaimKind",
    "EdgeKind",
    "EnumerationStrategy",
    "LemmaId",
    "MembershipVerdict",
    "OutputFormat",
    "Sign",
    "Verdict",

    # Valores
    "DegreePairSpectrum",
    "EdgeClass",
    "Graph",
    "RadicalValue",

    # Certificados
    "ApexCertificate",
    "ConstructionResult",
    "FamilyMembership",
    "RandicResult",
]
