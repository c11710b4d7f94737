import math
from typing import Any, Optional

from fastapi import APIRouter, Depends, Query

from api.dependencies import allow_large_param, http_error, strategy_param
from models.enums import EnumerationStrategy
from schemas.common import PaginatedResponse, PaginationMeta
from schemas.enumeration import EnumerationSummary
from services import enumeration_service

router = APIRouter()


@router.get(
    "/connected/{n}",
    response_model=EnumerationSummary,
    summary="Contar Grafos Conexos"
)
def count_connected(
    n: int,
    allow_large: bool = Depends(allow_large_param),
) -> Any:
    try:
        return enumeration_service.summarize_connected(n, allow_large=allow_large)
    except Exception as e:
        raise http_error(e)


@router.get(
    "/apex-trees",
    response_model=PaginatedResponse[str],
    summary="Listar k-Apex Trees"
)
def list_apex_trees(
    k: int = Query(..., ge=1),
    n: int = Query(..., ge=2),
    page: int = Query(1, ge=1, description="Número de página"),
    per_page: int = Query(50, ge=1, le=500, description="Elementos por página"),
    strategy: Optional[EnumerationStrategy] = Depends(strategy_param),
    allow_large: bool = Depends(allow_large_param),
) -> Any:
    """Códigos graph6 canónicos, en orden ascendente, con paginación"""
    try:
        codes = enumeration_service.apex_tree_codes(k, n, strategy, allow_large=allow_large)
    except Exception as e:
        raise http_error(e)

    total_count = len(codes)
    total_pages = math.ceil(total_count / per_page) if total_count > 0 else 0
    skip = (page - 1) * per_page
    return {
        "data": codes[skip:skip + per_page],
        "meta": PaginationMeta(
            page=page,
            limit=per_page,
            totalItems=total_count,
            totalPages=total_pages,
            hasNextPage=(page < total_pages),
            hasPrevPage=(page > 1)
        )
    }


@router.get(
    "/cross-check",
    response_model=EnumerationSummary,
    summary="Validación Cruzada A/B"
)
def cross_check(
    k: int = Query(..., ge=1),
    n: int = Query(..., ge=2),
    allow_large: bool = Depends(allow_large_param),
) -> Any:
    """Corre ambas estrategias; una diferencia es un error interno (500)"""
    try:
        return enumeration_service.count_cross_check(k, n, allow_large=allow_large)
    except Exception as e:
        raise http_error(e)
