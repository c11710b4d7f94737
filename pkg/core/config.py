from pydantic_settings import BaseSettings
from pydantic import Field


class Settings(BaseSettings):
    """
    Configuración global de la aplicación

    Lee variables de entorno automáticamente.
    Prioridad:
    1. Variables de entorno del sistema
    2. Archivo .env
    3. Valores por defecto
    """

    # App
    APP_NAME: str = "ApexRandic"
    VERSION: str = "1.0.0"
    API_V1_STR: str = "/api/v1"
    DEBUG: bool = False
    LOG_LEVEL: str = Field("INFO", description="Nivel de logging (DEBUG, INFO, WARNING)")

    # Paralelismo
    APEXRANDIC_JOBS: int = Field(1, ge=1, description="Procesos por defecto para --jobs")

    # Guardas de costo
    MAX_CONNECTED_ORDER: int = Field(10, description="Orden máximo de enumerate_connected sin --allow-large")
    BRUTEFORCE_MAX_ORDER: int = Field(16, description="Orden máximo del oráculo exhaustivo de apex")
    MAX_ATTACH_CANDIDATES: int = Field(
        4_000_000,
        description="Candidatos máximos de la estrategia B (árbol + k vértices nuevos)"
    )
    MAX_CUBIC_BASE_ORDER: int = Field(14, description="Orden máximo de los grafos cúbicos del catálogo")

    # Aritmética exacta y reportes
    DECIMAL_DIGITS: int = Field(12, description="Dígitos significativos en los decimales reportados")
    SIGN_START_BITS: int = Field(64, description="Precisión inicial (bits) para decidir signos")
    REPORT_TIMING: bool = Field(True, description="Incluir bloque 'run' con tiempo de pared en los reportes")

    model_config = {
        "env_file": ".env",
        "case_sensitive": True,
        "extra": "ignore",
    }


settings = Settings()
