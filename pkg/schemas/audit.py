"""
Schemas de Auditoría
====================

Contratos JSON de las auditorías de afirmaciones.

Schemas incluidos:
-----------------
1. LemmaGrid / ClaimResult / LemmaAudit: escaneo exacto de funciones escalares
2. Violation / VerificationReport: escaneo de grafos contra una cota
3. ConjectureReport: máximo exacto y maximizadores contra la familia extremal
4. FamilyMembershipResponse / ConstructionResponse: familia extremal
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from core.exceptions import UsageError
from models.enums import AuditClaim, ClaimKind, LemmaId, MembershipVerdict, Sign, Verdict
from schemas.common import RadicalOut


def _rational_text(value) -> str:
    try:
        return str(Fraction(str(value).strip()))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"'{value}' no es un número racional")


# ======================================================================
# Lemas
# ======================================================================

class LemmaGrid(BaseModel):
    """
    Grilla de puntos racionales

    x recorre x_start, x_start + step, ..., ≤ x_stop. Con `relative` los
    extremos se suman al parámetro (a o m) de cada corrida. Los puntos fuera
    del dominio del lema se saltan y se cuentan.
    """

    params: List[str] = Field(default_factory=list, description="Valores de a (L2, L4) o m (L6)")
    x_start: str = Field(..., description="Inicio de x (racional)")
    x_stop: str = Field(..., description="Fin de x, inclusive (racional)")
    step: str = Field(default="1", description="Paso de x (racional positivo)")
    relative: bool = Field(default=False, description="Extremos relativos al parámetro")

    @field_validator("x_start", "x_stop", "step", mode="before")
    @classmethod
    def validate_rational(cls, v) -> str:
        return _rational_text(v)

    @field_validator("params", mode="before")
    @classmethod
    def validate_params(cls, v) -> List[str]:
        return [_rational_text(p) for p in v]

    @field_validator("step")
    @classmethod
    def validate_step(cls, v: str) -> str:
        if Fraction(v) <= 0:
            raise ValueError("El paso de la grilla debe ser positivo")
        return v

    @classmethod
    def parse(cls, text: str, params: Optional[List[str]] = None, relative: bool = False) -> "LemmaGrid":
        """Lee 'inicio..fin' o 'inicio..fin:paso'"""
        body, _, step = text.partition(":")
        start, sep, stop = body.partition("..")
        if not sep or not start or not stop:
            raise UsageError(f"Grilla inválida '{text}': se esperaba 'inicio..fin[:paso]'")
        try:
            return cls(params=params or [], x_start=start, x_stop=stop, step=step or "1", relative=relative)
        except ValueError as exc:
            raise UsageError(f"Grilla inválida '{text}': {exc}")

    def runs(self) -> List[Tuple[Optional[Fraction], List[Fraction]]]:
        """(parámetro, valores de x) por corrida, en orden"""
        params = [Fraction(p) for p in self.params] or [None]
        start, stop, step = Fraction(self.x_start), Fraction(self.x_stop), Fraction(self.step)
        runs = []
        for param in params:
            offset = param if (self.relative and param is not None) else 0
            xs = []
            x = start + offset
            while x <= stop + offset:
                xs.append(x)
                x += step
            runs.append((param, xs))
        return runs


class GridPoint(BaseModel):
    """Punto testigo o extremo de un escaneo"""
    param: Optional[str] = Field(default=None, description="a o m, según el lema")
    x: str
    x_next: Optional[str] = Field(default=None, description="Segundo punto en afirmaciones de monotonía")
    value: RadicalOut = Field(..., description="f(x), o f(x_next) − f(x) en monotonía")
    sign: Sign


class ClaimResult(BaseModel):
    kind: ClaimKind
    verdict: Verdict
    checked: int = Field(..., description="Puntos (o pares consecutivos) verificados")
    witness: Optional[GridPoint] = Field(default=None, description="Primera falla, si la hay")
    extreme: Optional[GridPoint] = Field(default=None, description="Punto más cercano a fallar cuando se cumple")


class LemmaAudit(BaseModel):
    """
    Resultado de auditar un lema sobre una grilla

    Una falla es un hallazgo: el reporte se completa igual.
    """
    lemma: LemmaId
    grid: LemmaGrid
    points: int
    skipped_out_of_domain: int
    claims: List[ClaimResult]

    @property
    def holds(self) -> bool:
        return all(claim.verdict is Verdict.HOLDS_ON_GRID for claim in self.claims)

    model_config = {
        "json_schema_extra": {
            "example": {
                "lemma": "L5",
                "grid": {"params": [], "x_start": "4", "x_stop": "30", "step": "1", "relative": False},
                "points": 27,
                "skipped_out_of_domain": 0,
                "claims": [{
                    "kind": "positive",
                    "verdict": "fails",
                    "checked": 2,
                    "witness": {
                        "param": None, "x": "5", "x_next": None,
                        "value": {"exact": "...", "decimal": "-0.00569121..."},
                        "sign": "negative"
                    },
                    "extreme": None
                }]
            }
        }
    }


# ======================================================================
# Escaneos sobre grafos
# ======================================================================

class Violation(BaseModel):
    """Grafo que contradice la afirmación auditada"""
    graph6: str
    value: Optional[RadicalOut] = Field(default=None, description="R(G)")
    bound: Optional[RadicalOut] = Field(default=None, description="Cota comparada")
    difference: Optional[RadicalOut] = Field(default=None, description="R(G) − cota")
    asymmetric_by_gap: Dict[str, int] = Field(default_factory=dict, description="Aristas asimétricas por brecha de grado")
    detail: Optional[str] = None


class VerificationReport(BaseModel):
    """Resultado de auditar una afirmación sobre todos los grafos de un rango"""
    claim: AuditClaim
    k: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None
    scanned: int = Field(..., description="Grafos recorridos")
    qualifying: int = Field(..., description="Grafos que cumplen la hipótesis")
    holds: bool
    violations: List[Violation] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)


class ConjectureCandidate(BaseModel):
    graph6: str
    value: RadicalOut
    is_member: bool


class ConjectureReport(BaseModel):
    """
    Máximo exacto de R sobre los k-apex trees de orden n

    `comparison` es el signo de max_value − extremal_value. La conjetura se
    cumple si el máximo coincide con el valor extremal y los maximizadores
    son exactamente los miembros de la familia; con familia vacía se exige
    un máximo estrictamente menor.
    """
    k: int
    n: int
    scanned: int
    max_value: Optional[RadicalOut] = None
    maximizers: List[str] = Field(default_factory=list, description="graph6 canónicos")
    extremal_value: RadicalOut
    family_members: List[str] = Field(default_factory=list)
    family_empty: bool
    comparison: Optional[Sign] = None
    conjecture_holds: bool
    counterexamples: List[ConjectureCandidate] = Field(default_factory=list)
    float_max: Optional[float] = None
    float_agrees: bool = Field(..., description="|max exacto − max flotante| ≤ 1e-9 y mismo argmax")


# ======================================================================
# Familia extremal
# ======================================================================

class FamilyMembershipRequest(BaseModel):
    """Grafos en texto (graph6 o lista de aristas) y el k a verificar"""
    text: str = Field(..., description="Contenido graph6 o lista de aristas")
    k: int = Field(..., ge=2, description="Número apex exigido")

    model_config = {
        "json_schema_extra": {
            "example": {"text": "6 8\n0 1\n0 2\n0 3\n1 2\n1 3\n2 4\n4 5\n5 3\n", "k": 2}
        }
    }


class FamilyMembershipResponse(BaseModel):
    graph6: str
    k: int
    n: int
    degrees_ok: bool
    asym_count: int
    apex_k: Optional[int] = None
    verdict: MembershipVerdict
    value: Optional[RadicalOut] = None
    extremal_value: RadicalOut

    @classmethod
    def of(cls, membership) -> "FamilyMembershipResponse":
        from services.family_service import extremal_value
        from services.graph_io_service import write_graph6

        g = membership.graph
        return cls(
            graph6=write_graph6(g),
            k=membership.k,
            n=g.n,
            degrees_ok=membership.degrees_ok,
            asym_count=membership.asym_count,
            apex_k=membership.apex_k,
            verdict=membership.verdict,
            value=RadicalOut.of(membership.value) if membership.value is not None else None,
            extremal_value=RadicalOut.of(extremal_value(g.n)),
        )


class ConstructionResponse(BaseModel):
    k: int
    n: int
    found: bool
    graph6: Optional[str] = None
    source: str = Field(..., description="Construcción usada: paramétrica, catálogo cúbico o búsqueda")
    searched: List[str] = Field(default_factory=list)
    membership: Optional[FamilyMembershipResponse] = None

    @classmethod
    def of(cls, result, membership=None) -> "ConstructionResponse":
        from services.graph_io_service import write_graph6

        return cls(
            k=result.k,
            n=result.n,
            found=result.found,
            graph6=write_graph6(result.graph) if result.found else None,
            source=result.source,
            searched=list(result.searched),
            membership=FamilyMembershipResponse.of(membership) if membership is not None else None,
        )
