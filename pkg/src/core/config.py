from pydantic_settings import BaseSettings
from pydantic import field_validator
from typing import Optional
import logging

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    # Поиск индуцированных подграфов и проверка чистоты
    search_budget: int = 5_000_000

    # Точная ширина дерева
    treewidth_vertex_limit: int = 22

    # Канонические коды (дедупликация подразбиений)
    canonical_vertex_limit: int = 64
    canonical_budget: int = 200_000

    # Языки: переборный оракул и ширина маски автомата
    brute_force_max_pattern_length: int = 10
    brute_force_budget: int = 2_000_000
    mask_width: int = 12

    # Зонды структур
    fancy_max_paths: int = 16
    fancy_max_size: int = 3

    # Оракул кисточек
    strand_len_max: int = 12

    # Processing
    max_workers: int = 1

    # Логирование
    log_level: str = "INFO"
    log_json: bool = False
    log_file: Optional[str] = None

    @field_validator('log_file', mode='before')
    @classmethod
    def empty_str_to_none(cls, v: str) -> Optional[str]:
        """Преобразовать пустые строки в None"""
        if v == '':
            return None
        return v

    @field_validator('log_level', mode='before')
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Уровень логирования в верхнем регистре"""
        return str(v).upper()

    def budget_summary(self) -> dict:
        """Эффективные бюджеты для баннера и отчетов"""
        return {
            "search_budget": self.search_budget,
            "treewidth_vertex_limit": self.treewidth_vertex_limit,
            "brute_force_budget": self.brute_force_budget,
            "mask_width": self.mask_width,
            "max_workers": self.max_workers,
        }

    class Config:
        env_file = ".env"
        env_prefix = "TASSEL_"
        # Переменные окружения не чувствительны к регистру
        case_sensitive = False


settings = Settings()
