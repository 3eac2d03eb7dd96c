from pydantic import BaseModel, Field
from typing import Any, Dict, List, Optional
from enum import Enum

TOOL_NAME = "tassel-toolkit"
TOOL_VERSION = "1.0.0"


class ExitCode(int, Enum):
    HOLDS = 0
    FAILS = 1
    ERROR = 2


class CriterionResult(BaseModel):
    """Результат одного критерия приемки"""
    number: int
    title: str
    passed: bool
    detail: str = ""
    checked: int = Field(0, description="Сколько экземпляров проверено")
    skipped: List[str] = Field(default_factory=list, description="Что пропущено и почему")
    seconds: float = 0.0


class RunReport(BaseModel):
    """Отчет одного запуска командной строки"""
    tool: str = TOOL_NAME
    version: str = TOOL_VERSION
    command: List[str] = Field(default_factory=list, description="Аргументы команды")
    seed: Optional[int] = None
    input_hashes: Dict[str, str] = Field(default_factory=dict, description="SHA-256 входных файлов")
    verdict: str = ""
    exit_code: ExitCode = ExitCode.HOLDS
    data: Dict[str, Any] = Field(default_factory=dict, description="Свидетели, сертификаты, счетчики")
    criteria: List[CriterionResult] = Field(default_factory=list)
    output: Optional[str] = Field(None, description="Текст, который печатается как есть вместо таблицы")
    seconds: float = 0.0
