from typing import Any, List

from fastapi import APIRouter, File, UploadFile

from api.dependencies import MAX_UPLOAD_BYTES, http_error
from schemas.randic import GraphTextInput, RandicEntry
from services.graph_io_service import read_graphs

router = APIRouter()


@router.post(
    "/",
    response_model=List[RandicEntry],
    summary="Índice de Randić"
)
def compute_randic(*, payload: GraphTextInput) -> Any:
    """
    Índice de Randić exacto de cada grafo del texto

    **Formatos aceptados:**
    - graph6, una cadena por línea
    - lista de aristas: bloques "n m" seguidos de m líneas "u v"
    """
    try:
        return [RandicEntry.of(g, line) for line, g in read_graphs(payload.text)]
    except Exception as e:
        raise http_error(e)


@router.post(
    "/file",
    response_model=List[RandicEntry],
    summary="Índice de Randić desde Archivo"
)
async def compute_randic_file(
    *,
    file: UploadFile = File(..., description="Archivo graph6 o lista de aristas (máx 1MB)")
) -> Any:
    """Igual que POST /randic con el contenido de un archivo subido"""
    content = await file.read()
    if len(content) > MAX_UPLOAD_BYTES:
        raise http_error(ValueError("El archivo excede el tamaño máximo de 1MB"))
    try:
        text = content.decode("utf-8")
        return [RandicEntry.of(g, line) for line, g in read_graphs(text)]
    except UnicodeDecodeError:
        raise http_error(ValueError("El archivo no está codificado en UTF-8"))
    except Exception as e:
        raise http_error(e)
