"""
Pool de Procesos
================

Ejecución paralela determinista para escaneos y enumeraciones.

El espacio de búsqueda se reparte de forma estática (una tarea por elemento de
`items`) y los resultados vuelven en el mismo orden de entrada, así que el
resultado es idéntico con cualquier número de procesos.
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, TypeVar

from core.config import settings

T = TypeVar("T")
R = TypeVar("R")


def resolve_jobs(jobs: Optional[int]) -> int:
    """--jobs explícito > APEXRANDIC_JOBS > 1"""
    if jobs is None:
        jobs = settings.APEXRANDIC_JOBS
    return max(1, int(jobs))


def chunked(items: Iterable[T], size: int) -> Iterator[List[T]]:
    """Parte un iterable en listas de tamaño `size` (la última puede ser menor)"""
    iterator = iter(items)
    while True:
        chunk = list(islice(iterator, size))
        if not chunk:
            return
        yield chunk


def map_ordered(fn: Callable[[T], R], items: Sequence[T], jobs: Optional[int] = None) -> List[R]:
    """
    Aplica `fn` a cada elemento y devuelve los resultados en orden

    Con jobs <= 1 (o pocas tareas) corre en el proceso actual; `fn` debe ser
    una función de módulo para poder enviarse a los procesos hijos.
    """
    workers = resolve_jobs(jobs)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    chunksize = max(1, len(items) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
