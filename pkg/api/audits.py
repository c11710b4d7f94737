"""
Endpoints de Auditoría
======================

Escaneos exactos de lemas, del teorema de no regularidad, de los corolarios
y de la conjetura. Una afirmación que falla no es un error HTTP: el reporte
se devuelve completo con sus testigos.
"""

from typing import Any, Optional

from fastapi import APIRouter, Depends, Query

from api.dependencies import allow_large_param, http_error, strategy_param
from models.enums import EnumerationStrategy, LemmaId
from schemas.apex import NonRegularityAudit
from schemas.audit import ConjectureReport, LemmaAudit, LemmaGrid, VerificationReport
from services import apex_service, family_service, lemma_service

router = APIRouter()


@router.get(
    "/lemmas/{lemma}",
    response_model=LemmaAudit,
    summary="Auditar Lema"
)
def audit_lemma(
    lemma: LemmaId,
    grid: str = Query(..., description="Grilla de x: 'inicio..fin[:paso]'", examples=["4..30"]),
    params: Optional[str] = Query(None, description="Valores de a o m separados por coma"),
    relative: bool = Query(False, description="La grilla se suma a cada parámetro"),
) -> Any:
    """
    Escaneo exacto de signos de L2..L6 sobre una grilla racional

    **Ejemplo:** L5 con grilla 4..30 encuentra f(5) < 0.
    """
    try:
        values = [p.strip() for p in params.split(",") if p.strip()] if params else None
        return lemma_service.audit_lemma(lemma, LemmaGrid.parse(grid, values, relative))
    except Exception as e:
        raise http_error(e)


@router.get(
    "/lemma1",
    response_model=VerificationReport,
    summary="Auditar Identidad de Brecha"
)
def audit_gap_identity(
    n: int = Query(..., ge=1, description="Orden máximo de los grafos conexos"),
    allow_large: bool = Depends(allow_large_param),
) -> Any:
    """R(G) = n/2 − gap(G) sobre todos los grafos conexos de orden ≤ n"""
    try:
        return lemma_service.audit_gap_identity(n, allow_large=allow_large)
    except Exception as e:
        raise http_error(e)


@router.get(
    "/theorem1",
    response_model=NonRegularityAudit,
    summary="Auditar No Regularidad"
)
def audit_theorem1(
    k: int = Query(..., ge=2),
    n: int = Query(..., ge=3),
    strategy: Optional[EnumerationStrategy] = Depends(strategy_param),
    allow_large: bool = Depends(allow_large_param),
) -> Any:
    """k-apex trees regulares de orden n (ninguno esperado si n ≥ 4k − 1)"""
    try:
        return apex_service.audit_nonregularity(k, n, strategy=strategy, allow_large=allow_large)
    except Exception as e:
        raise http_error(e)


@router.get(
    "/corollary1",
    response_model=VerificationReport,
    summary="Auditar Corolario de Brecha ≥ 2"
)
def audit_corollary1(
    k: int = Query(..., ge=2),
    n: int = Query(...),
    strategy: Optional[EnumerationStrategy] = Depends(strategy_param),
    allow_large: bool = Depends(allow_large_param),
) -> Any:
    try:
        return family_service.check_corollary_gap2(k, n, strategy=strategy, allow_large=allow_large)
    except Exception as e:
        raise http_error(e)


@router.get(
    "/corollary2",
    response_model=VerificationReport,
    summary="Auditar Corolario de Aristas Casi Iguales"
)
def audit_corollary2(
    k: int = Query(..., ge=2),
    n: int = Query(...),
    m: int = Query(..., description="2 ≤ m ≤ k + 2"),
    strategy: Optional[EnumerationStrategy] = Depends(strategy_param),
    allow_large: bool = Depends(allow_large_param),
) -> Any:
    try:
        return family_service.check_corollary_many_asym(k, n, m, strategy=strategy, allow_large=allow_large)
    except Exception as e:
        raise http_error(e)


@router.get(
    "/conjecture",
    response_model=ConjectureReport,
    summary="Auditar Conjetura"
)
def audit_conjecture(
    k: int = Query(..., ge=2),
    n: int = Query(...),
    strategy: Optional[EnumerationStrategy] = Depends(strategy_param),
    allow_large: bool = Depends(allow_large_param),
) -> Any:
    """
    Máximo exacto de R y maximizadores contra la familia extremal

    **Nota:** para (k=2, n=7) la respuesta trae `conjecture_holds=false`
    con el contraejemplo en `counterexamples`.
    """
    try:
        return family_service.verify_conjecture(k, n, strategy=strategy, allow_large=allow_large)
    except Exception as e:
        raise http_error(e)
