"""
Enumeraciones del Sistema
=========================

Este módulo define todas las enumeraciones (valores predefinidos) usadas en el sistema.

Heredan de (str, Enum) para que Pydantic las valide y las serialice como texto
en los reportes JSON.
"""

from enum import Enum


class EdgeKind(str, Enum):
    """
    Clase de una arista según los grados de sus extremos

    - SYMMETRIC: d(u) = d(v)
    - ASYMMETRIC: d(u) ≠ d(v)
    """
    SYMMETRIC = "symmetric"
    ASYMMETRIC = "asymmetric"


class Sign(str, Enum):
    """Signo exacto de un RadicalValue"""
    NEGATIVE = "negative"
    ZERO = "zero"
    POSITIVE = "positive"

    @property
    def value_int(self) -> int:
        return {"negative": -1, "zero": 0, "positive": 1}[self.value]


class LemmaId(str, Enum):
    """
    Funciones escalares auditables

    - L2: (1/√x − 1/√a)², creciente para x > a > 0
    - L3: (1/√(x+1) − 1/√x)², decreciente para x > 0
    - L4: (1/√x − 1/√a)² − C, creciente y positiva (a ≥ 2 entero, x ≥ a+2)
    - L5: (x−1)(1/√x − 1/√(x−1))² − C, positiva para x ≥ 4
    - L6: (x−1)(1/√m − 1/√(m−1))² − C, positiva para x ≥ m ≥ 4
    """
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    L5 = "L5"
    L6 = "L6"


class ClaimKind(str, Enum):
    """Tipo de afirmación verificada punto a punto"""
    INCREASING = "increasing"
    DECREASING = "decreasing"
    POSITIVE = "positive"


class Verdict(str, Enum):
    """Resultado de una afirmación sobre la grilla escaneada"""
    HOLDS_ON_GRID = "holds-on-grid"
    FAILS = "fails"


class AuditClaim(str, Enum):
    """Afirmaciones que acepta `audit` en el CLI"""
    LEMMA1 = "lemma1"
    LEMMA2 = "lemma2"
    LEMMA3 = "lemma3"
    LEMMA4 = "lemma4"
    LEMMA5 = "lemma5"
    LEMMA6 = "lemma6"
    THEOREM1 = "theorem1"
    COROLLARY1 = "corollary1"
    COROLLARY2 = "corollary2"
    CONJECTURE = "conjecture"

    @property
    def lemma_id(self) -> "LemmaId":
        return LemmaId(f"L{self.value[-1]}")


class MembershipVerdict(str, Enum):
    """
    Veredicto de pertenencia a la familia extremal

    Las condiciones se revisan en este orden y se reporta la primera que falla.
    """
    MEMBER = "member"
    ORDER_TOO_SMALL = "order-too-small"
    DEGREES_OUTSIDE_2_3 = "degrees-outside-2-3"
    ASYMMETRIC_COUNT = "asymmetric-count-not-2"
    APEX_NUMBER = "apex-number-mismatch"


class EnumerationStrategy(str, Enum):
    """
    Estrategias para enumerar k-apex trees

    - A: filtrar enumerate_connected por número apex
    - B: árboles de orden n−k + k vértices nuevos con todas las vecindades
    - AUTO: B si cabe en la guarda de candidatos, si no A
    """
    A = "A"
    B = "B"
    AUTO = "auto"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
