from typing import Any, List

from fastapi import APIRouter

from api.dependencies import http_error
from schemas.apex import ApexReport
from schemas.randic import GraphTextInput
from services.graph_io_service import read_graphs

router = APIRouter()


@router.post(
    "/",
    response_model=List[ApexReport],
    summary="Número Apex"
)
def compute_apex(*, payload: GraphTextInput) -> Any:
    """
    Número apex, testigo lexicográficamente mínimo y árbol residual por grafo

    Los grafos desconexos se devuelven con `error` en lugar de fallar la petición.
    """
    try:
        return [ApexReport.of(g, line) for line, g in read_graphs(payload.text)]
    except Exception as e:
        raise http_error(e)
