from typing import ClassVar, Dict
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="SCALESYM_",
        extra='ignore'
    )

    # Logging
    LOG_LEVEL: str = Field(default="WARNING")

    # Параллельные воркеры для сеток и поиска (на вывод не влияют)
    WORKERS: int = Field(default=1, ge=1)

    # Формат отчетов: менять только вместе с SCHEMA_VERSION
    SCHEMA_VERSION: ClassVar[str] = "1.0"
    DEFAULT_GRID_RADIUS: ClassVar[int] = 50
    DEFAULT_SEARCH_GRID_RADIUS: ClassVar[int] = 10
    DECIMAL_DIGITS: ClassVar[int] = 12
    FLOAT_POINT_BOUND: ClassVar[int] = 1000

    # Допуск проверки численных корней генераторов
    NUMERIC_RELATION_TOL: ClassVar[float] = 1e-12

    # SVG: единиц на шаг решетки
    SVG_UNIT: ClassVar[int] = 40
    SVG_STYLE: ClassVar[Dict[str, str]] = {
        "lattice_stroke": "#555555",
        "image_fill": "#c0392b",
        "direction_stroke": "#2471a3",
        "cell_stroke": "#999999",
    }


settings = Settings()
