from typing import Optional


class ToolkitException(Exception):
    """Базовое исключение инструментария"""
    pass


class GraphException(ToolkitException):
    """Некорректный граф: идентификатор вне диапазона, петля"""
    pass


class FormatException(ToolkitException):
    """Ошибка разбора файла"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class WitnessException(ToolkitException):
    """Структурно некорректный свидетель"""

    def __init__(self, field: str, detail: str):
        self.field = field
        self.detail = detail
        super().__init__(f"{field}: {detail}")


class PreconditionViolation(ToolkitException):
    """Нарушено предусловие конструктивной операции"""

    def __init__(self, clause: str, detail: str, vertex: Optional[int] = None):
        self.clause = clause
        self.detail = detail
        self.vertex = vertex
        super().__init__(f"{clause}: {detail}")


class InternalDefect(ToolkitException):
    """Шаг конструктивного доказательства не выполнился при верных предусловиях"""
    pass


class BudgetExceeded(ToolkitException):
    """Исчерпан бюджет перебора"""
    pass


class SolverLimitExceeded(ToolkitException):
    """Граф больше предела точного решателя"""
    pass


class UnsupportedQuery(ToolkitException):
    """Запрос вне поддерживаемого диапазона (не вердикт)"""
    pass
