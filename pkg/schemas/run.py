"""
Schemas de Ejecución
====================

Envoltorio común de todos los reportes: bloque `run` (herramienta, versión,
tiempo de pared, procesos), `config` (los parámetros que determinan el
resultado) y `report` (el cuerpo).
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from models.enums import AuditClaim, EnumerationStrategy, OutputFormat


class RunInfo(BaseModel):
    tool: str
    version: str
    wall_time: Optional[float] = Field(default=None, description="Segundos; ausente con --no-timing")
    jobs: Optional[int] = Field(default=None, description="Procesos usados; ausente con --no-timing")


class RunConfig(BaseModel):
    """
    Configuración de una corrida

    No incluye --jobs ni rutas de salida, así que el reporte no depende de ellos.
    """
    command: str
    claim: Optional[AuditClaim] = None
    k: Optional[int] = None
    n: Optional[int] = None
    n_range: Optional[List[int]] = None
    m: Optional[int] = None
    grid: Optional[str] = None
    params: Optional[List[str]] = None
    strategy: Optional[EnumerationStrategy] = None
    input: Optional[str] = None
    format: OutputFormat = OutputFormat.JSON
    allow_large: bool = False
