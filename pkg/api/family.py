from typing import Any, List

from fastapi import APIRouter, Depends, Query

from api.dependencies import allow_large_param, http_error
from schemas.audit import ConstructionResponse, FamilyMembershipRequest, FamilyMembershipResponse
from schemas.common import RadicalOut
from services import family_service
from services.graph_io_service import read_graphs

router = APIRouter()


@router.get(
    "/extremal-value/{n}",
    response_model=RadicalOut,
    summary="Valor Extremal"
)
def read_extremal_value(n: int) -> Any:
    """n/2 − (5 − 2√6)/6 exacto"""
    return RadicalOut.of(family_service.extremal_value(n))


@router.get(
    "/construct",
    response_model=ConstructionResponse,
    summary="Construir Miembro"
)
def construct_member(
    k: int = Query(..., ge=2),
    n: int = Query(...),
    allow_large: bool = Depends(allow_large_param),
) -> Any:
    """
    Construye un miembro de G̃ₖⁿ

    **Orden de intentos:**
    - K₄ subdividido (k = 2)
    - catálogo de grafos cúbicos con una arista subdividida
    - búsqueda sobre los k-apex trees de orden n
    """
    try:
        result = family_service.construct_member(k, n, allow_large=allow_large)
        membership = family_service.family_membership(result.graph, k) if result.found else None
        return ConstructionResponse.of(result, membership)
    except Exception as e:
        raise http_error(e)


@router.post(
    "/membership",
    response_model=List[FamilyMembershipResponse],
    summary="Verificar Pertenencia"
)
def check_membership(*, payload: FamilyMembershipRequest) -> Any:
    """Veredicto por grafo; se reporta la primera condición que falla"""
    try:
        return [
            FamilyMembershipResponse.of(family_service.family_membership(g, payload.k))
            for _, g in read_graphs(payload.text)
        ]
    except Exception as e:
        raise http_error(e)
