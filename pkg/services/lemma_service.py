"""
Servicio de Auditoría de Lemas
==============================

Evalúa exactamente las funciones escalares auditables y verifica sus
afirmaciones (positividad, monotonía) punto a punto sobre grillas racionales.

Funciones (C = (1/√3 − 1/√2)² = 5/6 − (1/3)√6):
- L2(x; a) = (1/√x − 1/√a)²                 creciente, x > a > 0
- L3(x)    = (1/√(x+1) − 1/√x)²             decreciente, x > 0
- L4(x; a) = (1/√x − 1/√a)² − C             creciente y positiva, a ≥ 2 entero, x ≥ a+2
- L5(x)    = (x−1)(1/√x − 1/√(x−1))² − C    positiva, x ≥ 4
- L6(x; m) = (x−1)(1/√m − 1/√(m−1))² − C    positiva, x ≥ m ≥ 4

Las fallas se reportan como hallazgos con su testigo y signo exacto; nunca
se corrigen las fórmulas.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import ConsistencyError, DomainError, UsageError
from core.logger import get_logger
from core.workers import map_ordered
from models.enums import AuditClaim, ClaimKind, LemmaId, Sign, Verdict
from models.radical import RadicalValue, inv_sqrt, sign
from schemas.audit import ClaimResult, GridPoint, LemmaAudit, LemmaGrid, VerificationReport, Violation
from schemas.common import RadicalOut

logger = get_logger("lemmas")

LEMMA_CONSTANT_C: RadicalValue = (inv_sqrt(3) - inv_sqrt(2)) ** 2

LEMMA_CLAIMS: Dict[LemmaId, Tuple[ClaimKind, ...]] = {
    LemmaId.L2: (ClaimKind.INCREASING,),
    LemmaId.L3: (ClaimKind.DECREASING,),
    LemmaId.L4: (ClaimKind.INCREASING, ClaimKind.POSITIVE),
    LemmaId.L5: (ClaimKind.POSITIVE,),
    LemmaId.L6: (ClaimKind.POSITIVE,),
}

PARAMETRIZED = {LemmaId.L2, LemmaId.L4, LemmaId.L6}

Point = Tuple[Fraction, Optional[Fraction]]


# ======================================================================
# Evaluación exacta
# ======================================================================

def in_domain(lemma: LemmaId, x: Fraction, param: Optional[Fraction] = None) -> bool:
    if lemma is LemmaId.L2:
        return param is not None and x > param > 0
    if lemma is LemmaId.L3:
        return x > 0
    if lemma is LemmaId.L4:
        return param is not None and param.denominator == 1 and param >= 2 and x >= param + 2
    if lemma is LemmaId.L5:
        return x >= 4
    return param is not None and x >= param >= 4


def lemma_function(lemma: LemmaId, point: Sequence) -> RadicalValue:
    """
    Valor exacto de la función del lema en un punto racional

    Args:
        lemma: L2..L6
        point: (x,) para L3 y L5; (x, a) para L2 y L4; (x, m) para L6

    Raises:
        DomainError: punto fuera del dominio o aridad incorrecta
    """
    lemma = LemmaId(lemma)
    expected = 2 if lemma in PARAMETRIZED else 1
    if len(point) != expected:
        raise DomainError(f"{lemma.value} recibe {expected} parámetro(s), no {len(point)}")
    x = Fraction(point[0])
    param = Fraction(point[1]) if expected == 2 else None
    if not in_domain(lemma, x, param):
        raise DomainError(f"Punto fuera del dominio de {lemma.value}: x={x}, parámetro={param}")
    return _evaluate(lemma, x, param)


def _evaluate(lemma: LemmaId, x: Fraction, param: Optional[Fraction]) -> RadicalValue:
    if lemma is LemmaId.L2:
        return (inv_sqrt(x) - inv_sqrt(param)) ** 2
    if lemma is LemmaId.L3:
        return (inv_sqrt(x + 1) - inv_sqrt(x)) ** 2
    if lemma is LemmaId.L4:
        return (inv_sqrt(x) - inv_sqrt(param)) ** 2 - LEMMA_CONSTANT_C
    if lemma is LemmaId.L5:
        return ((inv_sqrt(x) - inv_sqrt(x - 1)) ** 2).scale(x - 1) - LEMMA_CONSTANT_C
    return ((inv_sqrt(param) - inv_sqrt(param - 1)) ** 2).scale(x - 1) - LEMMA_CONSTANT_C


def _evaluate_task(task: Tuple[str, Fraction, Optional[Fraction]]) -> RadicalValue:
    lemma, x, param = task
    return _evaluate(LemmaId(lemma), x, param)


# ======================================================================
# Auditoría sobre grillas
# ======================================================================

def audit_lemma(lemma: LemmaId, grid: LemmaGrid, jobs: Optional[int] = None) -> LemmaAudit:
    """
    Verifica las afirmaciones del lema en cada punto de la grilla

    Positividad: signo exacto de f en cada punto. Monotonía: signo exacto de
    f(x_{i+1}) − f(x_i) entre puntos consecutivos de una misma corrida.

    Raises:
        UsageError: la grilla no trae parámetros y el lema los necesita (o al revés)
    """
    lemma = LemmaId(lemma)
    if lemma in PARAMETRIZED and not grid.params:
        raise UsageError(f"{lemma.value} necesita valores de parámetro en la grilla")
    if lemma not in PARAMETRIZED and grid.params:
        raise UsageError(f"{lemma.value} no recibe parámetros")

    runs: List[Tuple[Optional[Fraction], List[Fraction]]] = []
    skipped = 0
    for param, xs in grid.runs():
        kept = [x for x in xs if in_domain(lemma, x, param)]
        skipped += len(xs) - len(kept)
        runs.append((param, kept))

    tasks = [(lemma.value, x, param) for param, xs in runs for x in xs]
    logger.info(f"[AUDIT] {lemma.value}: {len(tasks)} puntos, {skipped} fuera de dominio")
    values = iter(map_ordered(_evaluate_task, tasks, jobs))
    evaluated = [(param, [(x, next(values)) for x in xs]) for param, xs in runs]

    claims = []
    for kind in LEMMA_CLAIMS[lemma]:
        if kind is ClaimKind.POSITIVE:
            claims.append(_check_positive(evaluated))
        else:
            claims.append(_check_monotone(evaluated, kind))
    return LemmaAudit(lemma=lemma, grid=grid, points=len(tasks), skipped_out_of_domain=skipped, claims=claims)


def _grid_point(param, x, value, x_next=None) -> GridPoint:
    return GridPoint(
        param=None if param is None else str(param),
        x=str(x),
        x_next=None if x_next is None else str(x_next),
        value=RadicalOut.of(value),
        sign=sign(value),
    )


def _check_positive(evaluated) -> ClaimResult:
    checked = 0
    extreme = None
    for param, points in evaluated:
        for x, value in points:
            checked += 1
            if sign(value) is not Sign.POSITIVE:
                return ClaimResult(
                    kind=ClaimKind.POSITIVE, verdict=Verdict.FAILS, checked=checked,
                    witness=_grid_point(param, x, value)
                )
            if extreme is None or value < extreme[2]:
                extreme = (param, x, value)
    return ClaimResult(
        kind=ClaimKind.POSITIVE, verdict=Verdict.HOLDS_ON_GRID, checked=checked,
        extreme=_grid_point(*extreme) if extreme else None
    )


def _check_monotone(evaluated, kind: ClaimKind) -> ClaimResult:
    wanted = Sign.POSITIVE if kind is ClaimKind.INCREASING else Sign.NEGATIVE
    checked = 0
    extreme = None
    for param, points in evaluated:
        for (x, fx), (x_next, f_next) in zip(points, points[1:]):
            checked += 1
            diff = f_next - fx
            if sign(diff) is not wanted:
                return ClaimResult(
                    kind=kind, verdict=Verdict.FAILS, checked=checked,
                    witness=_grid_point(param, x, diff, x_next)
                )
            magnitude = diff if wanted is Sign.POSITIVE else -diff
            if extreme is None or magnitude < extreme[0]:
                extreme = (magnitude, param, x, diff, x_next)
    return ClaimResult(
        kind=kind, verdict=Verdict.HOLDS_ON_GRID, checked=checked,
        extreme=_grid_point(*extreme[1:]) if extreme else None
    )


# ======================================================================
# Identidad del funcional de brecha
# ======================================================================

def audit_gap_identity(n_max: int, jobs: Optional[int] = None, allow_large: bool = False) -> VerificationReport:
    """
    R(G) = n/2 − gap(G) sobre todos los grafos conexos de orden 1..n_max

    Un fallo de la identidad se reporta como violación (señala un bug en la
    aritmética exacta).
    """
    from services.enumeration_service import enumerate_connected
    from services.graph_io_service import write_graph6
    from services.randic_service import verify_gap_identity

    if n_max < 1:
        raise UsageError(f"n debe ser ≥ 1, recibido {n_max}")
    scanned = 0
    qualifying = 0
    violations = []
    for n in range(1, n_max + 1):
        for g in enumerate_connected(n, jobs=jobs, allow_large=allow_large):
            scanned += 1
            if g.m == 0:
                continue
            qualifying += 1
            try:
                verify_gap_identity(g)
            except ConsistencyError as exc:
                violations.append(Violation(graph6=write_graph6(g), detail=str(exc)))
    logger.info(f"[AUDIT] identidad de brecha: {qualifying} grafos, {len(violations)} violaciones")
    return VerificationReport(
        claim=AuditClaim.LEMMA1, n=n_max, scanned=scanned, qualifying=qualifying,
        holds=not violations, violations=violations,
        notes=["El grafo de un vértice no tiene aristas y queda fuera de la hipótesis"],
    )
