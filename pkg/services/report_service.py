"""
Servicio de Reportes
====================

Armado y serialización de reportes.

- JSON: claves ordenadas, indentación de 2 espacios, salto de línea final
- CSV: separador ',' y punto decimal, sin dependencia de locale

Con REPORT_TIMING=false el bloque `run` queda solo con herramienta y
versión, y el archivo completo es idéntico entre corridas.
"""

import csv
import io
import json
from typing import Any, Iterable, List, Optional, Sequence

from pydantic import BaseModel

from core.config import settings
from core.exceptions import UsageError
from core.logger import get_logger
from schemas.run import RunConfig, RunInfo

logger = get_logger("report")

SCAN_PLOT_HEADER = ("n", "count", "max_R", "extremal_value", "gap_to_bound", "conjecture")


def build_envelope(
    config: RunConfig,
    report: Any,
    jobs: Optional[int] = None,
    wall_time: Optional[float] = None,
    timing: Optional[bool] = None,
) -> dict:
    """{run, config, report} listo para serializar"""
    timing = settings.REPORT_TIMING if timing is None else timing
    run = RunInfo(
        tool=settings.APP_NAME,
        version=settings.VERSION,
        wall_time=round(wall_time, 3) if (timing and wall_time is not None) else None,
        jobs=jobs if timing else None,
    )
    return {
        "run": run.model_dump(mode="json", exclude_none=True),
        "config": config.model_dump(mode="json"),
        "report": _dump(report),
    }


def _dump(report: Any) -> Any:
    if isinstance(report, BaseModel):
        return report.model_dump(mode="json")
    if isinstance(report, (list, tuple)):
        return [_dump(item) for item in report]
    return report


def render_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if value is None else value for value in row])
    return buffer.getvalue()


# ======================================================================
# scan-plot
# ======================================================================

def parse_n_range(text: str) -> List[int]:
    """'7..9' → [7, 8, 9]; '7' → [7]; un rango con inicio > fin queda vacío"""
    start, sep, stop = text.partition("..")
    try:
        if not sep:
            return [int(text)]
        return list(range(int(start), int(stop) + 1))
    except ValueError:
        raise UsageError(f"Rango inválido '{text}': se esperaba 'inicio..fin'")


def scan_plot_rows(
    k: int,
    n_values: Sequence[int],
    jobs: Optional[int] = None,
    strategy=None,
    allow_large: bool = False,
) -> List[List[Any]]:
    """
    Filas (n, cantidad, max R, valor extremal, brecha a la cota, conjetura)

    Para n < 4k − 1 la fila reporta el máximo igual y marca la conjetura n/a.
    """
    from services.enumeration_service import apex_tree_codes, resolve_strategy
    from services.family_service import extremal_value, verify_conjecture
    from services.graph_io_service import parse_graph6
    from services.randic_service import randic_value

    for n in n_values:
        if n <= k:
            raise UsageError(f"Cada n del rango debe ser > k (k={k}, n={n})")
        resolve_strategy(k, n, strategy, allow_large)

    rows = []
    for n in n_values:
        extremal = extremal_value(n)
        if n >= 4 * k - 1 and k >= 2:
            report = verify_conjecture(k, n, jobs, strategy, allow_large)
            count = report.scanned
            best = report.max_value.to_value() if report.max_value else None
            verdict = "holds" if report.conjecture_holds else "fails"
        else:
            codes = apex_tree_codes(k, n, strategy, jobs, allow_large)
            count = len(codes)
            best = None
            for code in codes:
                value = randic_value(parse_graph6(code))
                if best is None or value > best:
                    best = value
            verdict = "n/a"
        rows.append([
            n,
            count,
            best.to_decimal() if best is not None else None,
            extremal.to_decimal(),
            (extremal - best).to_decimal() if best is not None else None,
            verdict,
        ])
        logger.info(f"[REPORT] scan-plot k={k} n={n}: {count} grafos")
    return rows
