"""
Configuración centralizada para la librería y la CLI usando Pydantic BaseSettings.
Variables de entorno toman precedencia sobre valores por defecto.
"""

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Configuración global de la aplicación."""

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Verificación aleatoria de invariancia
    DEFAULT_TRIALS: int = 50
    DEFAULT_SEED: int = 0
    RANDOM_NUMERATOR_BOUND: int = 9
    RANDOM_DENOMINATOR_BOUND: int = 9
    MAX_TRANSFORM_REJECTIONS: int = 1000

    # Parser de expresiones
    MAX_EXPONENT: int = 256

    # Formas binarias
    DEFAULT_CONVENTION: str = "binomial"

    # Descubrimiento de invariantes
    CHECK_DELTA_ON_DISCOVERY: bool = True
    MAX_DISCOVERY_ORDER: int = 12
    MAX_DISCOVERY_DEGREE: int = 12

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False


# Instancia global de settings
settings = Settings()
